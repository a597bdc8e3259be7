#include "conifold/report.hpp"

#include <algorithm>
#include <sstream>

#include "conifold/atoms.hpp"
#include "conifold/errors.hpp"
#include "conifold/integral_structure.hpp"
#include "conifold/random_config.hpp"

namespace conifold {

using json = nlohmann::json;

namespace {

// Tolerances for the loop checks.
constexpr double kUnipotencyTol = 1e-8;
constexpr double kCanonicalModelTol = 1e-7;

std::string pair_label(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

/// Accumulates one named check over many pairs or samples; first failure wins the detail.
class Tally {
public:
    explicit Tally(std::string name) : name_(std::move(name)) {}
    void add(bool ok, const std::string& where) {
        ++count_;
        if (!ok && pass_) {
            pass_ = false;
            detail_ = "fails at " + where;
        }
    }
    void commit(InvariantLog& log, const std::string& prefix = {}) const {
        log.record(prefix + name_, pass_, pass_ ? std::to_string(count_) + " checked" : detail_);
    }

private:
    std::string name_;
    bool pass_ = true;
    std::size_t count_ = 0;
    std::string detail_;
};

json graph_json(const InteractionGraph& g) {
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"lambda", to_json(e.lambda)}});
    json comps = json::array();
    for (const auto& c : g.components) {
        json members = json::array();
        for (auto v : c) members.push_back(v + 1);
        comps.push_back(members);
    }
    return {{"vertices", g.vertex_count}, {"edges", edges}, {"components", comps}};
}

json atoms_json(const AtomDecomposition& d) {
    return {{"n", d.n},
            {"rigid_dim", d.rigid_dim},
            {"covector_rank", d.covector_rank},
            {"flexible_count", d.flexible_count},
            {"flexible_dims", d.flexible_dims},
            {"vanishing_dim", d.vanishing_dim},
            {"overlap_dim", d.overlap_dim},
            {"splits", d.splits}};
}

json nnf_json(const NnfReport& r) {
    return {{"stokes_abelian", r.stokes_abelian},
            {"graph_has_edge", r.graph_has_edge},
            {"lambda_offdiag_nonzero", r.lambda_offdiag_nonzero},
            {"splits", r.splits},
            {"consistent", r.consistent}};
}

json exploration_json(const GroupExploration& g) {
    return {{"max_len", g.max_len},
            {"element_count", g.element_count},
            {"abelian", g.abelian},
            {"sphere_sizes", g.sphere_sizes}};
}

json relation_json(std::size_t i, std::size_t j, const RelationResult& r, bool first_order) {
    return {{"i", i + 1},
            {"j", j + 1},
            {"lambda", to_json(r.lambda)},
            {"relation", std::string(to_string(r.relation))},
            {"commutes", r.commutes},
            {"braid_holds", r.braid_holds},
            {"group_commutator_first_order", first_order},
            {"consistent", r.consistent}};
}

json tool_json() { return {{"name", kToolName}, {"version", kToolVersion}}; }

json kdata_json(const KDataBlock& block, const CycleConfig& config, InvariantLog& log) {
    const auto& k = block.data;
    json out;
    const auto ni = n_int(k.chi_with_s, k.chi_s_with);
    out["n_int"] = {{"matrix", to_json(ni.matrix)},
                    {"contraction", to_json(ni.contraction)},
                    {"rank", ni.rank},
                    {"unipotent", ni.unipotent}};
    log.record("n_int_rank_at_most_one", ni.rank <= 1, "rank " + std::to_string(ni.rank));
    log.record("n_int_square_is_contraction_multiple", ni.matrix * ni.matrix == ni.contraction * ni.matrix);
    if (!k.labels.empty()) out["labels"] = k.labels;

    if (k.euler_pairing && k.correspondence && k.spherical) {
        const auto rep = decategorification_check(k, config, block.node);
        out["decategorification"] = {{"node", block.node + 1},
                                     {"premise_spherical", rep.premise_spherical},
                                     {"premise_pairing", rep.premise_pairing},
                                     {"square_commutes", rep.square_commutes},
                                     {"classes_checked", rep.classes_checked}};
        log.record("decategorification_premise", rep.premise_spherical && rep.premise_pairing,
                   "ch(S) = -delta and chi = C^T P C");
        log.record("decategorification_square", rep.square_commutes,
                   std::to_string(rep.classes_checked) + " classes");
        const auto twisted = spherical_twist(*k.spherical, *k.spherical, *k.euler_pairing);
        const bool self_zero = dot(*k.spherical, *k.euler_pairing * *k.spherical) == 0;
        out["twist_fixes_spherical"] = twisted == *k.spherical;
        if (self_zero) log.record("twist_fixes_spherical", twisted == *k.spherical);
    }
    return out;
}

json cluster_json(const ClusterBlock& block, const CycleConfig& config, InvariantLog& log) {
    json out;
    const auto state = fg_coords(block.central_charges, block.z);
    json coords = json::array();
    for (auto c : state.coordinates) coords.push_back(to_json(c));
    json charges = json::array();
    for (auto c : block.central_charges) charges.push_back(to_json(c));
    out["z"] = to_json(block.z);
    out["central_charges"] = charges;
    out["coordinates"] = coords;
    if (config.size() == 2 && state.coordinates.size() == 2) {
        const Rational lam = intersection_matrix(config)(0, 1);
        const auto mutated = fg_mutate(state, lam);
        json mc = json::array();
        for (auto c : mutated.coordinates) mc.push_back(to_json(c));
        out["mutated_coordinates"] = mc;
        out["mutation_degenerate"] = mutated.degenerate;
        log.record("fg_mutate_preserves_x2", mutated.coordinates[1] == state.coordinates[1]);
        if (lam == 0) log.record("fg_mutate_identity_at_lambda_zero", mutated.coordinates == state.coordinates);

        const auto cmp = mutate_and_compare(config, state, 0, 1);
        out["comparison"] = {{"lambda12", to_json(cmp.lambda12)},
                             {"linear_transport", to_json(cmp.linear_transport)},
                             {"cluster_value", to_json(cmp.cluster_value)},
                             {"discrepancy", cmp.discrepancy},
                             {"degenerate", cmp.degenerate}};
    }
    return out;
}

} // namespace

void InvariantLog::record(std::string name, bool pass, std::string detail) {
    checks_.push_back({std::move(name), pass, std::move(detail)});
}

bool InvariantLog::all_pass() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const auto& c) { return c.pass; });
}

std::vector<std::string> InvariantLog::failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks_)
        if (!c.pass) out.push_back(c.name);
    return out;
}

json InvariantLog::to_json() const {
    json arr = json::array();
    for (const auto& c : checks_) {
        json entry = {{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) entry["detail"] = c.detail;
        arr.push_back(entry);
    }
    return arr;
}

int ReportResult::exit_code() const {
    if (resource_exceeded) return 3;
    return log.all_pass() ? 0 : 1;
}

json to_json(const Rational& q) { return format_rational(q); }

json to_json(const QVector& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(format_rational(x));
    return arr;
}

json to_json(const QMatrix& m) {
    json arr = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) arr.push_back(to_json(m.row(i)));
    return arr;
}

json to_json(std::complex<double> c) { return json::array({c.real(), c.imag()}); }

json to_json(const Matrix4c& m) {
    json arr = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int j = 0; j < 4; ++j) row.push_back(to_json(m(i, j)));
        arr.push_back(row);
    }
    return arr;
}

void check_operator_identities(const CycleConfig& config, InvariantLog& log, const std::string& prefix) {
    const std::size_t r = config.size();
    const std::size_t n = config.rank();

    Tally square("nilpotent_square_zero"), rank_one("nilpotent_rank_one"), det("pl_determinant_one"),
        inverse("stokes_inverse");
    for (std::size_t k = 0; k < r; ++k) {
        const QMatrix nk = nilpotent(config, k);
        const QMatrix tk = pl_operator(config, k);
        const std::string at = "node " + std::to_string(k + 1);
        square.add((nk * nk).is_zero(), at);
        rank_one.add(nk.rank() == 1, at);
        det.add(tk.determinant() == 1, at);
        inverse.add((stokes_operator(config, k) * pl_inverse(config, k)).is_identity(), at);
    }
    square.commit(log, prefix);
    rank_one.commit(log, prefix);
    det.commit(log, prefix);
    inverse.commit(log, prefix);

    Tally closed("commutator_closed_form"), group("group_commutator_expansion"),
        trivial("group_commutator_trivial_iff_lambda_zero"),
        iff("commutator_vanishes_iff_lambda_zero"), braid_law("braid_law_unit_lambda"),
        rel("relation_lambda_consistency"), hurwitz("hurwitz_conjugation"), trip("hurwitz_round_trip");
    const auto lam = intersection_matrix(config);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            if (i == j) continue;
            const std::string at = pair_label(i, j);
            const auto c = commutator_nilpotent(config, i, j);
            closed.add(c.agree, at);
            const auto gc = group_commutator(config, i, j);
            group.add(gc.expansion_agrees, at);
            trivial.add(gc.product.is_identity() == (lam(i, j) == 0), at);
            if (lam(i, j) == 0) {
                iff.add(c.direct.is_zero(), at);
            } else {
                iff.add(commutator_witness(config, i, j).has_value(), at);
            }
            const auto m = hurwitz_mutate(config, i, j);
            const auto back = hurwitz_mutate_inverse(m.mutated, i, j);
            hurwitz.add(m.conjugation_holds && hurwitz_mutate_inverse(config, i, j).conjugation_holds, at);
            trip.add(back.mutated.cycle(i) == config.cycle(i), at);
            if (i < j) {
                const auto rr = relation_classify(config, i, j);
                rel.add(rr.consistent, at);
                if (abs(lam(i, j)) == 1) braid_law.add(rr.braid_holds, at);
            }
        }
    }
    closed.commit(log, prefix);
    group.commit(log, prefix);
    trivial.commit(log, prefix);
    iff.commit(log, prefix);
    braid_law.commit(log, prefix);
    rel.commit(log, prefix);
    hurwitz.commit(log, prefix);
    trip.commit(log, prefix);

    const auto nnf = nnf_report(config);
    log.record(prefix + "nnf_consistency", nnf.consistent);

    const auto atoms = decompose(config);
    const bool count_ok = atoms.flexible_count == r &&
                          std::all_of(atoms.flexible_dims.begin(), atoms.flexible_dims.end(),
                                      [](std::size_t d) { return d == 1; });
    log.record(prefix + "atom_count", count_ok, std::to_string(atoms.flexible_count) + " flexible atoms");
    log.record(prefix + "rank_nullity", atoms.rigid_dim + atoms.covector_rank == n);

    const auto rigid = orthogonal_complement(config);
    bool orth = true;
    for (const auto& v : rigid)
        for (const auto& d : config.cycles()) orth = orth && pair(config.lattice(), v, d) == 0;
    log.record(prefix + "orthogonal_complement", orth);

    log.record(prefix + "clemens_schmid_exact", clemens_schmid_dims(config).exact);
}

ReportResult analyze(const DegenerationConfig& cfg, const AnalyzeOptions& options) {
    ReportResult res;
    const auto& config = cfg.cycles;
    json& doc = res.doc;
    doc["tool"] = tool_json();
    doc["command"] = "analyze";
    doc["config_hash"] = config_hash(cfg.source);

    doc["lattice"] = {{"rank", config.rank()},
                      {"nondegenerate", config.lattice().nondegenerate()},
                      {"cycle_count", config.size()},
                      {"cycle_span_rank", config.cycle_span_rank()},
                      {"cycles_independent", config.cycles_independent()}};
    const auto lam = intersection_matrix(config);
    doc["intersection_matrix"] = to_json(lam.matrix());

    json nilpotents = json::array();
    for (std::size_t k = 0; k < config.size(); ++k) nilpotents.push_back(to_json(nilpotent(config, k)));
    doc["nilpotents"] = nilpotents;

    json relations = json::array();
    for (std::size_t i = 0; i < config.size(); ++i)
        for (std::size_t j = i + 1; j < config.size(); ++j)
            relations.push_back(relation_json(i, j, relation_classify(config, i, j),
                                              group_commutator(config, i, j).agree));
    doc["relations"] = relations;

    json complement = json::array();
    for (const auto& v : orthogonal_complement(config)) complement.push_back(to_json(v));
    doc["orthogonal_complement"] = complement;

    const auto atoms = decompose(config);
    doc["atoms"] = atoms_json(atoms);
    doc["interaction_graph"] = graph_json(interaction_graph(config));
    const auto nnf = nnf_report(config);
    doc["nnf"] = nnf_json(nnf);

    const auto cs = clemens_schmid_dims(config);
    doc["clemens_schmid"] = {{"ker_dim", cs.ker_dim},
                             {"total_ker_dim", cs.total_ker_dim},
                             {"im_dim", cs.im_dim},
                             {"quotient_dim", cs.quotient_dim},
                             {"exact", cs.exact}};

    const long r = static_cast<long>(config.size());
    const auto ext2 = ext_dimensions(r, 2, !lam.off_diagonal_zero());
    doc["ext"] = {{"degree_1", *ext_dimensions(r, 1)},
                  {"degree_2", ext2 ? json(*ext2) : json("unknown")}};
    const auto hd = hodge_delta(r);
    doc["hodge_delta"] = {{"h11", hd.first}, {"h21", hd.second}};
    json grading = json::array();
    for (const auto& g : euler_grading({0, 2, 4, 6})) grading.push_back(to_json(g));
    doc["euler_grading"] = grading;

    check_operator_identities(config, res.log);

    if (config.size() > 0) {
        try {
            const auto g = group_explore(config, options.max_len, options.cap);
            doc["stokes_group"] = exploration_json(g);
            res.log.record("stokes_group_abelian_iff_split", g.abelian == atoms.splits);
        } catch (const GroupCapExceeded& e) {
            json partial = exploration_json(e.partial());
            partial["cap_exceeded"] = true;
            partial["error"] = e.what();
            doc["stokes_group"] = partial;
            res.resource_exceeded = true;
        }
    }

    if (cfg.kdata) doc["kdata"] = kdata_json(*cfg.kdata, config, res.log);
    if (cfg.cluster) doc["cluster"] = cluster_json(*cfg.cluster, config, res.log);

    doc["invariants"] = res.log.to_json();
    doc["failures"] = res.log.failures();
    return res;
}

json monodromy_json(const MonodromyResult& m) {
    return {{"loop",
             {{"z", to_json(m.loop.z)},
              {"radius", m.loop.radius},
              {"tol", m.loop.tol},
              {"max_steps", m.loop.max_steps},
              {"orientation", m.loop.orientation == Orientation::ccw ? "ccw" : "cw"},
              {"center", to_json(m.center)},
              {"base_point", to_json(m.base_point)}}},
            {"monodromy", to_json(m.monodromy)},
            {"canonical_monodromy", to_json(m.canonical)},
            {"residual_unipotency", m.residual_unipotency},
            {"deviation_norm", m.deviation_norm},
            {"relative_unipotency", m.relative_unipotency},
            {"singular_values", m.singular_values},
            {"eigenvalue_deviations", m.eigenvalue_deviations},
            {"rank_threshold", m.rank_threshold},
            {"numerical_rank", m.numerical_rank},
            {"canonical_model_deviation", m.canonical_model_deviation},
            {"steps",
             {{"accepted", m.steps.accepted},
              {"rejected", m.steps.rejected},
              {"rhs_evaluations", m.steps.rhs_evaluations},
              {"smallest_step", m.steps.smallest_step},
              {"largest_step", m.steps.largest_step}}}};
}

ReportResult monodromy(const std::optional<DegenerationConfig>& config, const LoopOptions& loop) {
    ReportResult res;
    if (config) {
        res = analyze(*config);
        res.doc.erase("invariants");
        res.doc.erase("failures");
    } else {
        res.doc["tool"] = tool_json();
    }
    res.doc["command"] = "monodromy";

    const auto m = integrate_loop(loop);
    json section = monodromy_json(m);
    const double max_dev = *std::max_element(m.eigenvalue_deviations.begin(), m.eigenvalue_deviations.end());
    res.log.record("monodromy_eigenvalues_unipotent", max_dev < kUnipotencyTol);
    res.log.record("monodromy_square_residual",
                   m.relative_unipotency < kUnipotencyTol && m.deviation_norm > 1e-6);
    res.log.record("monodromy_rank_one", m.numerical_rank == 1,
                   "numerical rank " + std::to_string(m.numerical_rank));
    res.log.record("canonical_frame_model", m.canonical_model_deviation < kCanonicalModelTol);

    if (config && config->cycles.size() == 1) {
        const auto cmp = monodromy_vs_pl(m, config->cycles, loop.z);
        section["pl_comparison"] = {{"numerical_unipotent", cmp.numerical_unipotent},
                                    {"numerical_log_rank", cmp.numerical_log_rank},
                                    {"pl_log_rank", cmp.pl_log_rank},
                                    {"numerical_jordan", cmp.numerical_jordan},
                                    {"pl_jordan", cmp.pl_jordan},
                                    {"agree", cmp.agree}};
        res.log.record("monodromy_matches_pl_conjugacy", cmp.agree);
    }
    res.doc["monodromy"] = section;
    res.doc["invariants"] = res.log.to_json();
    res.doc["failures"] = res.log.failures();
    return res;
}

ReportResult braid(const DegenerationConfig& cfg, std::size_t i, std::size_t j) {
    ReportResult res;
    res.doc["tool"] = tool_json();
    res.doc["command"] = "braid";
    res.doc["config_hash"] = config_hash(cfg.source);
    const auto r = relation_classify(cfg.cycles, i, j);
    res.doc["relation"] = relation_json(i, j, r, group_commutator(cfg.cycles, i, j).agree);
    res.log.record("relation_lambda_consistency", r.consistent);
    res.doc["invariants"] = res.log.to_json();
    res.doc["failures"] = res.log.failures();
    return res;
}

ReportResult mutate(const DegenerationConfig& cfg, std::size_t i, std::size_t j, bool inverse) {
    ReportResult res;
    res.doc["tool"] = tool_json();
    res.doc["command"] = "mutate";
    res.doc["config_hash"] = config_hash(cfg.source);
    const auto m = inverse ? hurwitz_mutate_inverse(cfg.cycles, i, j) : hurwitz_mutate(cfg.cycles, i, j);
    const auto back = inverse ? hurwitz_mutate(m.mutated, i, j) : hurwitz_mutate_inverse(m.mutated, i, j);
    res.doc["mutation"] = {{"i", i + 1},
                           {"j", j + 1},
                           {"direction", inverse ? "inverse" : "forward"},
                           {"coefficient", to_json(m.coefficient)},
                           {"new_cycle", to_json(m.mutated.cycle(i))},
                           {"conjugation", inverse ? "T_j T_i T_j^-1" : "T_j^-1 T_i T_j"},
                           {"conjugation_holds", m.conjugation_holds},
                           {"round_trip_restores", back.mutated.cycle(i) == cfg.cycles.cycle(i)}};
    res.doc["mutated_config"] = config_to_json(m.mutated);
    res.log.record("hurwitz_conjugation", m.conjugation_holds);
    res.log.record("hurwitz_round_trip", back.mutated.cycle(i) == cfg.cycles.cycle(i));

    if (cfg.cluster && cfg.cycles.size() == 2 && !inverse) {
        const auto state = fg_coords(cfg.cluster->central_charges, cfg.cluster->z);
        const auto cmp = mutate_and_compare(cfg.cycles, state, i, j);
        res.doc["cluster_comparison"] = {{"lambda12", to_json(cmp.lambda12)},
                                         {"linear_transport", to_json(cmp.linear_transport)},
                                         {"cluster_value", to_json(cmp.cluster_value)},
                                         {"discrepancy", cmp.discrepancy},
                                         {"degenerate", cmp.degenerate}};
    }
    res.doc["invariants"] = res.log.to_json();
    res.doc["failures"] = res.log.failures();
    return res;
}

ReportResult property_report(const std::optional<DegenerationConfig>& config, std::uint64_t seed,
                             std::size_t samples) {
    ReportResult res;
    res.doc["tool"] = tool_json();
    res.doc["command"] = "report";
    if (config) {
        res.doc["config_hash"] = config_hash(config->source);
        check_operator_identities(config->cycles, res.log, "config.");
    }

    // Aggregate every named identity over the corpus.
    const auto corpus = random_corpus(seed, samples);
    std::vector<std::string> names;
    std::vector<Tally> tallies;
    std::size_t unit_pairs = 0;
    std::size_t split_count = 0;
    for (std::size_t s = 0; s < corpus.size(); ++s) {
        InvariantLog local;
        check_operator_identities(corpus[s], local);
        for (const auto& c : local.checks()) {
            auto it = std::find(names.begin(), names.end(), c.name);
            if (it == names.end()) {
                names.push_back(c.name);
                tallies.emplace_back(c.name);
                it = names.end() - 1;
            }
            tallies[static_cast<std::size_t>(it - names.begin())].add(c.pass, "sample " + std::to_string(s));
        }
        const auto lam = intersection_matrix(corpus[s]);
        for (std::size_t i = 0; i < lam.size(); ++i)
            for (std::size_t j = i + 1; j < lam.size(); ++j)
                if (abs(lam(i, j)) == 1) ++unit_pairs;
        if (lam.off_diagonal_zero()) ++split_count;
    }
    for (const auto& t : tallies) t.commit(res.log, "corpus.");
    res.doc["corpus"] = {{"seed", seed}, {"samples", samples}, {"unit_lambda_pairs", unit_pairs},
                         {"split_configs", split_count}};
    res.doc["invariants"] = res.log.to_json();
    res.doc["failures"] = res.log.failures();
    return res;
}

namespace {

void render(std::ostringstream& os, const json& value, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const auto& [key, v] : value.items()) {
        if (key == "invariants") continue;
        const bool scalar_array =
            v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return !x.is_structured(); });
        if (v.is_object()) {
            os << pad << key << ":\n";
            render(os, v, indent + 2);
        } else if (v.is_array() && !scalar_array) {
            os << pad << key << ":\n";
            for (const auto& item : v) {
                if (item.is_object()) {
                    os << pad << "  -\n";
                    render(os, item, indent + 4);
                } else {
                    os << pad << "  " << item.dump() << "\n";
                }
            }
        } else {
            os << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    }
}

} // namespace

std::string render_text(const json& report) {
    std::ostringstream os;
    render(os, report, 0);
    if (report.contains("invariants")) {
        os << "invariants:\n";
        for (const auto& c : report["invariants"]) {
            os << "  [" << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "] " << c["name"].get<std::string>();
            if (c.contains("detail")) os << " (" << c["detail"].get<std::string>() << ")";
            os << "\n";
        }
    }
    return os.str();
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

} // namespace conifold
