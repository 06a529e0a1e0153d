#include "kq/scenario.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace kq {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

constexpr const char* kToolkitVersion = "0.1.0";
constexpr int kSchemaVersion = 1;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw ConfigParse(path + ": " + msg);
}

void check_fields(const json& obj, const std::string& path,
                  std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) fail(path, "expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* a : allowed)
            if (it.key() == a) known = true;
        if (!known) fail(path + "." + it.key(), "unknown field");
    }
}

const json& require(const json& obj, const std::string& path, const char* key) {
    if (!obj.contains(key)) fail(path + "." + key, "missing required field");
    return obj.at(key);
}

double as_number(const json& v, const std::string& path) {
    if (!v.is_number()) fail(path, "expected a number");
    return v.get<double>();
}

std::uint64_t as_seed(const json& v, const std::string& path) {
    if (!v.is_number_integer()) fail(path, "expected an integer seed");
    return v.get<std::uint64_t>();
}

std::string as_string(const json& v, const std::string& path) {
    if (!v.is_string()) fail(path, "expected a string");
    return v.get<std::string>();
}

cplx parse_cplx(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 2) fail(path, "complex scalar must be [re, im]");
    return cplx(as_number(v[0], path + "[0]"), as_number(v[1], path + "[1]"));
}

cvec parse_cvec(const json& v, const std::string& path) {
    if (!v.is_array() || v.empty()) fail(path, "expected a nonempty array");
    cvec out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(parse_cplx(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

HermitianOperator parse_operator(const json& spec, const std::string& path,
                                 std::optional<std::uint64_t> seed_override) {
    const std::string type = as_string(require(spec, path, "type"), path + ".type");
    if (type == "dense") {
        check_fields(spec, path, {"type", "entries"});
        const json& rows = require(spec, path, "entries");
        if (!rows.is_array() || rows.empty()) fail(path + ".entries", "expected matrix rows");
        const std::size_t n = rows.size();
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            const json& row = rows[i];
            if (!row.is_array() || row.size() != n)
                fail(path + ".entries[" + std::to_string(i) + "]", "matrix must be square");
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = parse_cplx(row[j], path + ".entries[" + std::to_string(i) + "][" +
                                                 std::to_string(j) + "]");
        }
        try {
            return assert_hermitian(m);
        } catch (const NotHermitian& e) {
            fail(path + ".entries", e.what());
        }
    }
    if (type == "diagonal") {
        check_fields(spec, path, {"type", "values"});
        const json& vals = require(spec, path, "values");
        if (!vals.is_array() || vals.empty()) fail(path + ".values", "expected numbers");
        Matrix m(vals.size(), vals.size());
        for (std::size_t i = 0; i < vals.size(); ++i)
            m(i, i) = as_number(vals[i], path + ".values[" + std::to_string(i) + "]");
        return assert_hermitian(m);
    }
    if (type == "tight_binding") {
        check_fields(spec, path, {"type", "m", "a", "b"});
        const json& aj = require(spec, path, "a");
        const json& bj = require(spec, path, "b");
        std::size_t m = static_cast<std::size_t>(as_number(require(spec, path, "m"), path + ".m"));
        if (!aj.is_array() || aj.size() != m) fail(path + ".a", "expected m on-site values");
        if (!bj.is_array() || bj.size() + 1 != m) fail(path + ".b", "expected m-1 hoppings");
        Matrix mat(m, m);
        for (std::size_t i = 0; i < m; ++i)
            mat(i, i) = as_number(aj[i], path + ".a[" + std::to_string(i) + "]");
        for (std::size_t i = 0; i + 1 < m; ++i) {
            double b = as_number(bj[i], path + ".b[" + std::to_string(i) + "]");
            if (!(b > 0.0)) fail(path + ".b[" + std::to_string(i) + "]", "hopping must be > 0");
            mat(i, i + 1) = b;
            mat(i + 1, i) = b;
        }
        return assert_hermitian(mat);
    }
    if (type == "random_hermitian") {
        check_fields(spec, path, {"type", "dim", "seed"});
        std::size_t dim =
            static_cast<std::size_t>(as_number(require(spec, path, "dim"), path + ".dim"));
        if (dim == 0) fail(path + ".dim", "dim must be >= 1");
        std::uint64_t seed = as_seed(require(spec, path, "seed"), path + ".seed");
        if (seed_override) seed = *seed_override;
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        Matrix m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = gauss(rng);
            for (std::size_t j = i + 1; j < dim; ++j) {
                cplx x(gauss(rng), gauss(rng));
                m(i, j) = x / std::sqrt(2.0);
                m(j, i) = std::conj(m(i, j));
            }
        }
        return assert_hermitian(m);
    }
    fail(path + ".type", "unknown operator type '" + type + "'");
}

StateVector parse_state(const json& spec, std::size_t dim, const std::string& path,
                        std::optional<std::uint64_t> seed_override) {
    const std::string type = as_string(require(spec, path, "type"), path + ".type");
    if (type == "basis") {
        check_fields(spec, path, {"type", "index"});
        std::size_t idx =
            static_cast<std::size_t>(as_number(require(spec, path, "index"), path + ".index"));
        if (idx >= dim) fail(path + ".index", "basis index out of range");
        cvec amps(dim, 0.0);
        amps[idx] = 1.0;
        return make_state(std::move(amps));
    }
    if (type == "inline") {
        check_fields(spec, path, {"type", "amplitudes"});
        cvec amps = parse_cvec(require(spec, path, "amplitudes"), path + ".amplitudes");
        if (amps.size() != dim) fail(path + ".amplitudes", "state dimension mismatch");
        return make_state(std::move(amps));
    }
    if (type == "uniform") {
        check_fields(spec, path, {"type"});
        return make_state(cvec(dim, 1.0));
    }
    if (type == "random") {
        check_fields(spec, path, {"type", "seed"});
        std::uint64_t seed = as_seed(require(spec, path, "seed"), path + ".seed");
        if (seed_override) seed = *seed_override;
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        cvec amps(dim);
        for (cplx& x : amps) x = cplx(gauss(rng), gauss(rng));
        return make_state(std::move(amps));
    }
    fail(path + ".type", "unknown state type '" + type + "'");
}

/// Deferred function spec: Tabulated values can only be resolved once
/// the measure (hence the atom list) is known.
struct FunctionSpec {
    std::string kind;
    TargetFunction fixed;      // valid for non-tabulated kinds
    cvec table;                // kind == tabulated
    std::uint64_t seed = 0;    // kind == random_tabulated

    TargetFunction resolve(const DiscreteMeasure& mu) const {
        if (kind == "tabulated") {
            if (table.size() != mu.support_size())
                throw ConfigParse("function.values: expected " +
                                  std::to_string(mu.support_size()) +
                                  " entries (one per measure atom), got " +
                                  std::to_string(table.size()));
            return TargetFunction::tabulated(table);
        }
        if (kind == "random_tabulated") {
            std::mt19937_64 rng(seed);
            std::uniform_real_distribution<double> unit(-1.0, 1.0);
            cvec values(mu.support_size());
            for (cplx& v : values) v = cplx(unit(rng), unit(rng));
            return TargetFunction::tabulated(std::move(values));
        }
        return fixed;
    }
};

FunctionSpec parse_function(const json& spec, const std::string& path,
                            std::optional<std::uint64_t> seed_override) {
    FunctionSpec out;
    out.kind = as_string(require(spec, path, "kind"), path + ".kind");
    if (out.kind == "inverse") {
        check_fields(spec, path, {"kind"});
        out.fixed = TargetFunction::inverse();
    } else if (out.kind == "time_evolution") {
        check_fields(spec, path, {"kind", "t"});
        out.fixed = TargetFunction::time_evolution(as_number(require(spec, path, "t"), path + ".t"));
    } else if (out.kind == "gaussian_filter") {
        check_fields(spec, path, {"kind", "center", "width"});
        double width = as_number(require(spec, path, "width"), path + ".width");
        if (!(width > 0.0)) fail(path + ".width", "width must be > 0");
        out.fixed = TargetFunction::gaussian_filter(
            as_number(require(spec, path, "center"), path + ".center"), width);
    } else if (out.kind == "step_filter") {
        check_fields(spec, path, {"kind", "threshold"});
        out.fixed = TargetFunction::step_filter(
            as_number(require(spec, path, "threshold"), path + ".threshold"));
    } else if (out.kind == "monomial") {
        check_fields(spec, path, {"kind", "k"});
        double k = as_number(require(spec, path, "k"), path + ".k");
        if (k < 0.0) fail(path + ".k", "monomial power must be >= 0");
        out.fixed = TargetFunction::monomial(static_cast<unsigned>(k));
    } else if (out.kind == "tabulated") {
        check_fields(spec, path, {"kind", "values"});
        out.table = parse_cvec(require(spec, path, "values"), path + ".values");
    } else if (out.kind == "random_tabulated") {
        check_fields(spec, path, {"kind", "seed"});
        out.seed = as_seed(require(spec, path, "seed"), path + ".seed");
        if (seed_override) out.seed = *seed_override;
    } else {
        fail(path + ".kind", "unknown function kind '" + out.kind + "'");
    }
    return out;
}

std::vector<double> parse_t_grid(const json& spec, const std::string& path) {
    if (spec.is_array()) {
        std::vector<double> grid;
        for (std::size_t i = 0; i < spec.size(); ++i)
            grid.push_back(as_number(spec[i], path + "[" + std::to_string(i) + "]"));
        if (grid.empty()) fail(path, "t_grid must be nonempty");
        return grid;
    }
    check_fields(spec, path, {"start", "stop", "points"});
    double start = as_number(require(spec, path, "start"), path + ".start");
    double stop = as_number(require(spec, path, "stop"), path + ".stop");
    std::size_t points =
        static_cast<std::size_t>(as_number(require(spec, path, "points"), path + ".points"));
    if (points < 2) fail(path + ".points", "need at least 2 grid points");
    std::vector<double> grid(points);
    for (std::size_t i = 0; i < points; ++i)
        grid[i] = start + (stop - start) * static_cast<double>(i) / (points - 1);
    return grid;
}

DisorderSpec parse_disorder(const json& spec, const std::string& path,
                            std::optional<std::uint64_t> seed_override) {
    check_fields(spec, path, {"strength_a", "strength_b", "seed"});
    DisorderSpec out;
    out.strength_a = as_number(require(spec, path, "strength_a"), path + ".strength_a");
    out.strength_b = as_number(require(spec, path, "strength_b"), path + ".strength_b");
    if (out.strength_a < 0.0 || out.strength_b < 0.0)
        fail(path, "disorder strengths must be >= 0");
    out.seed = as_seed(require(spec, path, "seed"), path + ".seed");
    if (seed_override) out.seed = *seed_override;
    return out;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

ojson jc(const cplx& z) { return ojson::array({z.real(), z.imag()}); }

ojson query_to_json(const QueryReport& rep) {
    ojson q;
    q["n_mu"] = rep.n_mu;
    q["epsilon"] = rep.epsilon;
    q["worst_case_degree"] = rep.worst_case_degree;
    q["matvec_count"] = rep.matvec_count;
    q["achieved_error"] = rep.achieved_error;
    if (rep.kappa_eff) q["kappa_eff"] = *rep.kappa_eff;
    if (rep.kappa_global) q["kappa_global"] = *rep.kappa_global;
    return q;
}

ojson tail_to_json(const QueryReport& rep) {
    ojson t = ojson::array();
    for (const auto& [d, err] : rep.tail_curve) t.push_back(ojson::array({d, err}));
    return t;
}

void fill_spectral(ojson& report, const KrylovDecomposition& k, const DiscreteMeasure& mu) {
    report["lanczos"] = {{"a", k.a}, {"b", k.b}, {"m", k.m}};
    report["measure"] = {{"atoms", mu.atoms}, {"weights", mu.weights}};
}

struct ScenarioShape {
    std::string mode;
    std::vector<const char*> fields;
};

const std::vector<ScenarioShape> kShapes = {
    {"duality", {"name", "mode", "operator", "state", "function", "epsilon"}},
    {"hhl", {"name", "mode", "operator", "state", "epsilon"}},
    {"dynamics", {"name", "mode", "operator", "state", "t_grid"}},
    {"family", {"name", "mode", "operator", "family_states", "function", "epsilon", "criterion"}},
    {"disorder", {"name", "mode", "operator", "state", "t_grid", "disorder"}},
};

const ScenarioShape& shape_for(const std::string& mode, const std::string& path) {
    for (const ScenarioShape& s : kShapes)
        if (s.mode == mode) return s;
    fail(path + ".mode", "unknown mode '" + mode + "'");
}

}  // namespace

LogLevel log_level() {
    const char* env = std::getenv("KQ_LOG");
    if (env == nullptr) return LogLevel::Error;
    std::string v(env);
    if (v == "debug") return LogLevel::Debug;
    if (v == "info") return LogLevel::Info;
    return LogLevel::Error;
}

void log(LogLevel level, const std::string& message) {
    static const LogLevel active = log_level();
    if (static_cast<int>(level) <= static_cast<int>(active)) std::cerr << "[kq] " << message << "\n";
}

void validate_scenario(const nlohmann::json& scenario) {
    const std::string path = "scenario";
    if (!scenario.is_object()) fail(path, "expected an object");
    const std::string name = as_string(require(scenario, path, "name"), path + ".name");
    const std::string mode = as_string(require(scenario, path, "mode"), path + ".mode");
    const ScenarioShape& shape = shape_for(mode, path);
    for (auto it = scenario.begin(); it != scenario.end(); ++it) {
        bool known = false;
        for (const char* f : shape.fields)
            if (it.key() == f) known = true;
        if (!known) fail(path + "." + it.key(), "unknown field for mode '" + mode + "'");
    }
    (void)name;

    HermitianOperator h = parse_operator(require(scenario, path, "operator"), path + ".operator", {});
    if (mode == "family") {
        const json& states = require(scenario, path, "family_states");
        if (!states.is_array() || states.empty())
            fail(path + ".family_states", "expected a nonempty array of state specs");
        for (std::size_t i = 0; i < states.size(); ++i)
            parse_state(states[i], h.dim(), path + ".family_states[" + std::to_string(i) + "]", {});
        if (scenario.contains("criterion")) {
            std::string c = as_string(scenario.at("criterion"), path + ".criterion");
            if (c != "max_state" && c != "averaged")
                fail(path + ".criterion", "expected 'max_state' or 'averaged'");
        }
    } else {
        parse_state(require(scenario, path, "state"), h.dim(), path + ".state", {});
    }
    if (mode == "duality" || mode == "family")
        parse_function(require(scenario, path, "function"), path + ".function", {});
    if (mode == "duality" || mode == "family" || mode == "hhl") {
        double eps = as_number(require(scenario, path, "epsilon"), path + ".epsilon");
        if (eps < 0.0) fail(path + ".epsilon", "epsilon must be >= 0");
    }
    if (mode == "dynamics" || mode == "disorder")
        parse_t_grid(require(scenario, path, "t_grid"), path + ".t_grid");
    if (mode == "disorder")
        parse_disorder(require(scenario, path, "disorder"), path + ".disorder", {});
}

nlohmann::json run_scenario(const nlohmann::json& scenario,
                            std::optional<std::uint64_t> seed_override) {
    validate_scenario(scenario);
    const std::string path = "scenario";
    const std::string name = scenario.at("name").get<std::string>();
    const std::string mode = scenario.at("mode").get<std::string>();

    const auto t_start = std::chrono::steady_clock::now();

    ojson report;
    report["schema_version"] = kSchemaVersion;
    report["toolkit_version"] = kToolkitVersion;
    report["scenario"] = name;
    report["mode"] = mode;
    {
        std::ostringstream hash;
        hash << std::hex << fnv1a(scenario.dump());
        report["config_hash"] = hash.str();
    }
    report["error"] = nullptr;

    HermitianOperator h =
        parse_operator(scenario.at("operator"), path + ".operator", seed_override);

    if (mode == "duality") {
        StateVector psi = parse_state(scenario.at("state"), h.dim(), path + ".state", seed_override);
        FunctionSpec fs = parse_function(scenario.at("function"), path + ".function", seed_override);
        double eps = scenario.at("epsilon").get<double>();
        KrylovDecomposition k = lanczos_decompose(h, psi);
        DiscreteMeasure mu = measure_from_decomposition(k);
        TargetFunction f = fs.resolve(mu);
        QueryReport rep = run_duality_scenario(h, psi, f, eps);
        fill_spectral(report, k, mu);
        report["query"] = query_to_json(rep);
        report["tail_curve"] = tail_to_json(rep);
    } else if (mode == "hhl") {
        StateVector psi = parse_state(scenario.at("state"), h.dim(), path + ".state", seed_override);
        double eps = scenario.at("epsilon").get<double>();
        KrylovDecomposition k = lanczos_decompose(h, psi);
        DiscreteMeasure mu = measure_from_decomposition(k);
        QueryReport rep = hhl_analysis(h, psi, eps);
        fill_spectral(report, k, mu);
        report["query"] = query_to_json(rep);
        report["tail_curve"] = tail_to_json(rep);
    } else if (mode == "dynamics") {
        StateVector psi = parse_state(scenario.at("state"), h.dim(), path + ".state", seed_override);
        std::vector<double> grid = parse_t_grid(scenario.at("t_grid"), path + ".t_grid");
        KrylovDecomposition k = lanczos_decompose(h, psi);
        DiscreteMeasure mu = measure_from_decomposition(k);
        fill_spectral(report, k, mu);
        ojson tj = ojson::array(), cj = ojson::array(), sj = ojson::array();
        for (double t : grid) {
            ChainState state = evolve_chain(k, t);
            tj.push_back(t);
            cj.push_back(mean_position(state));
            sj.push_back(jc(state.amplitudes[0]));  // S(t) = <psi0| e^{-iHt} |psi0>
        }
        report["curves"] = {{"t", tj}, {"mean_position", cj}, {"survival_amplitude", sj}};
    } else if (mode == "family") {
        const json& states = scenario.at("family_states");
        StateFamily fam;
        for (std::size_t i = 0; i < states.size(); ++i)
            fam.states.push_back(parse_state(
                states[i], h.dim(), path + ".family_states[" + std::to_string(i) + "]",
                seed_override));
        FunctionSpec fs = parse_function(scenario.at("function"), path + ".function", seed_override);
        double eps = scenario.at("epsilon").get<double>();
        std::string criterion = scenario.value("criterion", std::string("max_state"));

        FamilyDecomposition fd = family_decompose(h, fam);
        DiscreteMeasure mixture = family_measure(h, fam);
        TargetFunction f = fs.resolve(mixture);
        std::size_t q_max = family_query_complexity(h, fam, f, eps, FamilyCriterion::MaxState);
        std::size_t q_avg = family_query_complexity(h, fam, f, eps, FamilyCriterion::Averaged);
        report["family"] = {{"m_fam", fd.m_fam()},
                            {"per_state_dims", fd.per_state_dims},
                            {"q_max_state", q_max},
                            {"q_averaged", q_avg},
                            {"criterion", criterion},
                            {"q_selected", criterion == "averaged" ? q_avg : q_max}};
        report["measure"] = {{"atoms", mixture.atoms}, {"weights", mixture.weights}};
    } else if (mode == "disorder") {
        StateVector psi = parse_state(scenario.at("state"), h.dim(), path + ".state", seed_override);
        std::vector<double> grid = parse_t_grid(scenario.at("t_grid"), path + ".t_grid");
        DisorderSpec spec =
            parse_disorder(scenario.at("disorder"), path + ".disorder", seed_override);
        KrylovDecomposition k = lanczos_decompose(h, psi);
        DiscreteMeasure mu = measure_from_decomposition(k);
        fill_spectral(report, k, mu);
        DisorderCurves curves = disorder_experiment(k.a, k.b, spec, grid);
        report["curves"] = {{"t", curves.t_grid},
                            {"clean", curves.clean},
                            {"disordered", curves.disordered}};
    }

    const auto t_end = std::chrono::steady_clock::now();
    report["wall_time_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t_end - t_start).count();
    return report;
}

namespace {

void write_csv(const std::filesystem::path& file, const std::string& header,
               const std::vector<std::vector<double>>& columns) {
    std::ofstream out(file);
    if (!out) throw IoFailure("cannot write " + file.string());
    out << header << "\n";
    out.precision(17);
    const std::size_t rows = columns.empty() ? 0 : columns[0].size();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c)
            out << (c ? "," : "") << columns[c][r];
        out << "\n";
    }
}

void emit_csv(const ojson& report, const std::filesystem::path& out_dir,
              const std::string& name) {
    if (report.contains("tail_curve")) {
        std::vector<double> ds, errs;
        for (const auto& pair : report.at("tail_curve")) {
            ds.push_back(pair[0].get<double>());
            errs.push_back(pair[1].get<double>());
        }
        write_csv(out_dir / (name + ".tail.csv"), "d,tail_error", {ds, errs});
    }
    if (report.contains("curves")) {
        const ojson& curves = report.at("curves");
        std::vector<double> t = curves.at("t").get<std::vector<double>>();
        if (curves.contains("mean_position")) {
            write_csv(out_dir / (name + ".mean_position.csv"), "t,mean_position",
                      {t, curves.at("mean_position").get<std::vector<double>>()});
        }
        if (curves.contains("clean")) {
            write_csv(out_dir / (name + ".disorder.csv"), "t,clean,disordered",
                      {t, curves.at("clean").get<std::vector<double>>(),
                       curves.at("disordered").get<std::vector<double>>()});
        }
    }
}

json load_config(const std::string& config_path) {
    std::ifstream in(config_path);
    if (!in) throw IoFailure("cannot read config file " + config_path);
    json config;
    try {
        config = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigParse(std::string("JSON parse error: ") + e.what());
    }
    check_fields(config, "config", {"scenarios"});
    const json& scenarios = require(config, "config", "scenarios");
    if (!scenarios.is_array() || scenarios.empty())
        fail("config.scenarios", "expected a nonempty array");
    return config;
}

}  // namespace

int run_configs(const std::string& config_path, const std::string& out_dir,
                const std::string& format, std::optional<std::uint64_t> seed_override) {
    json config;
    try {
        config = load_config(config_path);
    } catch (const Error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);

    bool any_failed = false;
    for (const json& scenario : config.at("scenarios")) {
        std::string name = scenario.is_object() && scenario.contains("name") &&
                                   scenario.at("name").is_string()
                               ? scenario.at("name").get<std::string>()
                               : "unnamed";
        ojson report;
        try {
            report = run_scenario(scenario, seed_override);
            log(LogLevel::Info, "scenario '" + name + "' ok");
        } catch (const ConfigParse& e) {
            std::cerr << "config error in scenario '" << name << "': " << e.what() << "\n";
            return 2;
        } catch (const Error& e) {
            any_failed = true;
            report["schema_version"] = kSchemaVersion;
            report["toolkit_version"] = kToolkitVersion;
            report["scenario"] = name;
            report["error"] = {{"type", typeid(e).name()}, {"message", e.what()}};
            log(LogLevel::Error, "scenario '" + name + "' failed: " + e.what());
        }
        std::filesystem::path report_file =
            std::filesystem::path(out_dir) / (name + ".report.json");
        std::ofstream out(report_file);
        if (!out) {
            std::cerr << "cannot write " << report_file << "\n";
            return 1;
        }
        out << report.dump(2) << "\n";
        if (format == "csv" || format == "both") emit_csv(report, out_dir, name);
    }
    return any_failed ? 1 : 0;
}

int validate_config(const std::string& config_path) {
    try {
        json config = load_config(config_path);
        for (const json& scenario : config.at("scenarios")) validate_scenario(scenario);
    } catch (const Error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace kq
