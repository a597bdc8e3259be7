#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "conifold/config.hpp"
#include "conifold/errors.hpp"
#include "conifold/report.hpp"

namespace {

enum Exit { kPass = 0, kInvariant = 1, kInput = 2, kResource = 3 };

struct Globals {
    bool json = false;
    bool text = false;
    std::uint64_t seed = 1;
    std::size_t cap = conifold::kDefaultGroupCap;
    std::size_t max_len = 3;
    std::string output;
};

std::size_t node_index(long one_based, const conifold::DegenerationConfig& cfg, const char* name) {
    if (one_based < 1 || static_cast<std::size_t>(one_based) > cfg.cycles.size()) {
        throw conifold::InputError(std::string(name) + " must lie in 1.." + std::to_string(cfg.cycles.size()));
    }
    return static_cast<std::size_t>(one_based - 1);
}

int emit(const conifold::ReportResult& result, const Globals& g) {
    const std::string body = g.text ? conifold::render_text(result.doc) : conifold::dump_report(result.doc);
    if (g.output.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(g.output, std::ios::binary);
        if (!out) throw conifold::InputError("cannot write " + g.output);
        out << body;
    }
    return result.exit_code();
}

int fail(const char* kind, const std::exception& e, int code) {
    std::cerr << "conifold: " << kind << ": " << e.what() << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Operator-level analysis of conifold degenerations", "conifold"};
    app.set_version_flag("--version", std::string(conifold::kToolVersion));
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    auto* json_flag = app.add_flag("--json", g.json, "JSON output (default)");
    app.add_flag("--text", g.text, "Human-readable output")->excludes(json_flag);
    app.add_option("--seed", g.seed, "Seed for random-config commands");
    app.add_option("--cap", g.cap, "Element cap for Stokes group exploration")->check(CLI::PositiveNumber);
    app.add_option("--max-len", g.max_len, "Word length for Stokes group exploration");
    app.add_option("-o,--output", g.output, "Write the report to a file");

    std::string config_path;

    auto* analyze = app.add_subcommand("analyze", "Lattice, operator, atom and splitting report");
    analyze->add_option("config", config_path, "Configuration file")->required();

    auto* mono = app.add_subcommand("monodromy", "Numerical monodromy of the quantum connection around q = -1");
    mono->add_option("config", config_path, "Configuration file");
    std::string z_text;
    std::optional<double> radius;
    std::optional<double> tol;
    std::optional<std::size_t> max_steps;
    std::string orientation;
    mono->add_option("--z", z_text, "Quantum parameter z as re,im");
    mono->add_option("--radius", radius, "Loop radius around q = -1");
    mono->add_option("--tol", tol, "Integrator tolerance");
    mono->add_option("--max-steps", max_steps, "Integrator step budget");
    mono->add_option("--orientation", orientation, "ccw or cw")->check(CLI::IsMember({"ccw", "cw"}));

    long bi = 0;
    long bj = 0;
    auto* braid = app.add_subcommand("braid", "Classify the relation between two PL operators");
    braid->add_option("config", config_path)->required();
    braid->add_option("i", bi)->required();
    braid->add_option("j", bj)->required();

    bool inverse = false;
    auto* mutate = app.add_subcommand("mutate", "Hurwitz mutation of cycle i past cycle j");
    mutate->add_option("config", config_path)->required();
    mutate->add_option("i", bi)->required();
    mutate->add_option("j", bj)->required();
    mutate->add_flag("--inverse", inverse, "Apply the inverse move");

    std::size_t samples = 200;
    auto* report = app.add_subcommand("report", "Operator identities over a random configuration corpus");
    report->add_option("config", config_path, "Optional configuration checked alongside the corpus");
    report->add_option("--samples", samples, "Number of random configurations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kInput;
    }

    try {
        if (*analyze) {
            return emit(conifold::analyze(conifold::load_config(config_path), {g.max_len, g.cap}), g);
        }
        if (*mono) {
            std::optional<conifold::DegenerationConfig> cfg;
            conifold::LoopOptions loop;
            if (!config_path.empty()) {
                cfg = conifold::load_config(config_path);
                if (cfg->frobenius) loop = cfg->frobenius->loop;
            }
            if (!z_text.empty()) loop.z = conifold::parse_complex_text(z_text);
            if (radius) loop.radius = *radius;
            if (tol) loop.tol = *tol;
            if (max_steps) loop.max_steps = *max_steps;
            if (!orientation.empty())
                loop.orientation = orientation == "cw" ? conifold::Orientation::cw : conifold::Orientation::ccw;
            return emit(conifold::monodromy(cfg, loop), g);
        }
        if (*braid) {
            const auto cfg = conifold::load_config(config_path);
            return emit(conifold::braid(cfg, node_index(bi, cfg, "i"), node_index(bj, cfg, "j")), g);
        }
        if (*mutate) {
            const auto cfg = conifold::load_config(config_path);
            return emit(conifold::mutate(cfg, node_index(bi, cfg, "i"), node_index(bj, cfg, "j"), inverse), g);
        }
        if (*report) {
            std::optional<conifold::DegenerationConfig> cfg;
            if (!config_path.empty()) cfg = conifold::load_config(config_path);
            return emit(conifold::property_report(cfg, g.seed, samples), g);
        }
    } catch (const conifold::InputError& e) {
        return fail("input error", e, kInput);
    } catch (const conifold::InvariantError& e) {
        return fail("invariant violated", e, kInvariant);
    } catch (const conifold::ResourceError& e) {
        return fail("resource limit", e, kResource);
    } catch (const conifold::IntegrationError& e) {
        return fail("integration failed", e, kResource);
    }
    return kPass;
}
