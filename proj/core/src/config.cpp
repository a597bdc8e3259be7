#include "conifold/config.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "conifold/errors.hpp"

namespace conifold {

namespace {

using json = nlohmann::json;

const json& require(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw InputError(where + ": missing field \"" + key + "\"");
    }
    return obj.at(key);
}

QVector parse_vector(const json& arr, const std::string& field) {
    if (!arr.is_array()) throw InputError(field + ": expected an array");
    QVector v;
    for (std::size_t i = 0; i < arr.size(); ++i)
        v.push_back(parse_rational_json(arr[i], field + "[" + std::to_string(i) + "]"));
    return v;
}

QMatrix parse_matrix(const json& arr, const std::string& field) {
    if (!arr.is_array()) throw InputError(field + ": expected an array of rows");
    std::vector<QVector> rows;
    for (std::size_t i = 0; i < arr.size(); ++i)
        rows.push_back(parse_vector(arr[i], field + "[" + std::to_string(i) + "]"));
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].size() != rows.front().size())
            throw InputError(field + "[" + std::to_string(i) + "]: ragged row");
    return QMatrix::from_rows(rows);
}

Orientation parse_orientation(const std::string& s) {
    if (s == "ccw") return Orientation::ccw;
    if (s == "cw") return Orientation::cw;
    throw InputError("orientation must be \"ccw\" or \"cw\", got \"" + s + "\"");
}

FrobeniusBlock parse_frobenius(const json& f) {
    if (!f.is_object()) throw InputError("frobenius: expected an object");
    FrobeniusBlock b;
    if (f.contains("z")) b.loop.z = parse_complex_json(f["z"], "frobenius.z");
    if (f.contains("radius")) {
        if (!f["radius"].is_number()) throw InputError("frobenius.radius: expected a number");
        b.loop.radius = f["radius"].get<double>();
    }
    if (f.contains("tol")) {
        if (!f["tol"].is_number()) throw InputError("frobenius.tol: expected a number");
        b.loop.tol = f["tol"].get<double>();
    }
    if (f.contains("max_steps")) {
        if (!f["max_steps"].is_number_unsigned()) throw InputError("frobenius.max_steps: expected a positive integer");
        b.loop.max_steps = f["max_steps"].get<std::size_t>();
    }
    if (f.contains("orientation")) {
        if (!f["orientation"].is_string()) throw InputError("frobenius.orientation: expected a string");
        b.loop.orientation = parse_orientation(f["orientation"].get<std::string>());
    }
    return b;
}

KDataBlock parse_kdata(const json& k, const CycleConfig& cycles) {
    if (!k.is_object()) throw InputError("kdata: expected an object");
    KDataBlock b;
    auto& d = b.data;
    d.chi_with_s = parse_vector(require(k, "chi_with_S", "kdata"), "kdata.chi_with_S");
    d.chi_s_with = parse_vector(require(k, "chi_S_with", "kdata"), "kdata.chi_S_with");
    const std::size_t len = d.chi_with_s.size();
    if (d.chi_s_with.size() != len) throw InputError("kdata.chi_S_with: length differs from chi_with_S");
    if (len != 4 && len != cycles.size()) {
        throw InputError("kdata: chi vectors must have length 4 or r = " + std::to_string(cycles.size()));
    }
    if (k.contains("labels")) {
        for (const auto& l : k["labels"]) {
            if (!l.is_string()) throw InputError("kdata.labels: expected strings");
            d.labels.push_back(l.get<std::string>());
        }
    }
    if (k.contains("euler_pairing")) d.euler_pairing = parse_matrix(k["euler_pairing"], "kdata.euler_pairing");
    if (k.contains("correspondence"))
        d.correspondence = parse_matrix(k["correspondence"], "kdata.correspondence");
    if (k.contains("spherical")) d.spherical = parse_vector(k["spherical"], "kdata.spherical");
    if (k.contains("chern_characters")) {
        std::vector<GradedVector> chs;
        const auto& arr = k["chern_characters"];
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const auto v = parse_vector(arr[i], "kdata.chern_characters[" + std::to_string(i) + "]");
            if (v.size() != 4) throw InputError("kdata.chern_characters: each entry needs 4 graded slots");
            GradedVector g{};
            for (std::size_t s = 0; s < 4; ++s) g[s] = v[s].get_d();
            chs.push_back(g);
        }
        d.chern_characters = std::move(chs);
    }
    if (k.contains("node")) {
        if (!k["node"].is_number_integer()) throw InputError("kdata.node: expected an integer");
        const long node = k["node"].get<long>();
        if (node < 1 || static_cast<std::size_t>(node) > cycles.size())
            throw InputError("kdata.node: out of range");
        b.node = static_cast<std::size_t>(node - 1);
    }
    return b;
}

ClusterBlock parse_cluster(const json& c) {
    if (!c.is_object()) throw InputError("cluster: expected an object");
    ClusterBlock b;
    const auto& zs = require(c, "central_charges", "cluster");
    if (!zs.is_array()) throw InputError("cluster.central_charges: expected an array");
    for (std::size_t i = 0; i < zs.size(); ++i)
        b.central_charges.push_back(parse_complex_json(zs[i], "cluster.central_charges[" + std::to_string(i) + "]"));
    if (c.contains("z")) b.z = parse_complex_json(c["z"], "cluster.z");
    return b;
}

} // namespace

Rational parse_rational_json(const json& value, const std::string& field) {
    if (value.is_number_integer()) {
        return value.is_number_unsigned() ? Rational(mpz_class(std::to_string(value.get<std::uint64_t>())))
                                          : Rational(mpz_class(std::to_string(value.get<std::int64_t>())));
    }
    if (value.is_string()) {
        try {
            return parse_rational(value.get<std::string>());
        } catch (const InputError& e) {
            throw InputError(field + ": " + e.what());
        }
    }
    if (value.is_number_float()) {
        throw InputError(field + ": floats are not allowed; use an integer or a \"p/q\" string");
    }
    throw InputError(field + ": expected an integer or a \"p/q\" string");
}

std::complex<double> parse_complex_json(const json& value, const std::string& field) {
    if (value.is_number()) return {value.get<double>(), 0.0};
    if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number()) {
        return {value[0].get<double>(), value[1].get<double>()};
    }
    throw InputError(field + ": expected a complex number [re, im]");
}

std::complex<double> parse_complex_text(const std::string& text) {
    std::istringstream is(text);
    double re = 0.0;
    double im = 0.0;
    char comma = 0;
    if (!(is >> re)) throw InputError("cannot parse complex number \"" + text + "\"");
    if (is >> comma) {
        if (comma != ',' || !(is >> im)) throw InputError("complex numbers are written \"re,im\"");
    }
    std::string rest;
    if (is >> rest) throw InputError("trailing characters in complex number \"" + text + "\"");
    return {re, im};
}

DegenerationConfig parse_config(const json& doc) {
    if (!doc.is_object()) throw InputError("config: top level must be an object");
    const auto& rank_field = require(doc, "rank", "config");
    if (!rank_field.is_number_integer() || rank_field.get<long>() < 1) {
        throw InputError("rank: expected a positive integer");
    }
    const auto n = static_cast<std::size_t>(rank_field.get<long>());
    QMatrix pairing = parse_matrix(require(doc, "pairing", "config"), "pairing");
    if (pairing.rows() != n || pairing.cols() != n) {
        throw InputError("pairing: expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    }
    const auto& cyc = require(doc, "cycles", "config");
    if (!cyc.is_array()) throw InputError("cycles: expected an array");
    std::vector<QVector> cycles;
    for (std::size_t k = 0; k < cyc.size(); ++k) {
        cycles.push_back(parse_vector(cyc[k], "cycles[" + std::to_string(k) + "]"));
        if (cycles.back().size() != n) {
            throw InputError("cycles[" + std::to_string(k) + "]: length " +
                             std::to_string(cycles.back().size()) + " does not match rank " + std::to_string(n));
        }
    }

    DegenerationConfig cfg{CycleConfig(IntersectionLattice(std::move(pairing)), std::move(cycles)),
                           std::nullopt, std::nullopt, std::nullopt, doc};
    if (doc.contains("frobenius")) cfg.frobenius = parse_frobenius(doc["frobenius"]);
    if (doc.contains("kdata")) cfg.kdata = parse_kdata(doc["kdata"], cfg.cycles);
    if (doc.contains("cluster")) cfg.cluster = parse_cluster(doc["cluster"]);
    return cfg;
}

DegenerationConfig parse_config_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("config parse error: ") + e.what());
    }
    return parse_config(doc);
}

DegenerationConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config_text(buf.str());
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

json config_to_json(const CycleConfig& config) {
    auto row = [](const QVector& v) {
        json arr = json::array();
        for (const auto& x : v) {
            if (x.get_den() == 1 && x.get_num().fits_slong_p()) {
                arr.push_back(x.get_num().get_si());
            } else {
                arr.push_back(format_rational(x));
            }
        }
        return arr;
    };
    json doc;
    doc["rank"] = config.rank();
    json pairing = json::array();
    for (std::size_t i = 0; i < config.rank(); ++i) pairing.push_back(row(config.lattice().pairing().row(i)));
    doc["pairing"] = pairing;
    json cycles = json::array();
    for (const auto& c : config.cycles()) cycles.push_back(row(c));
    doc["cycles"] = cycles;
    return doc;
}

std::string config_hash(const json& doc) {
    const std::string canonical = doc.dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace conifold
