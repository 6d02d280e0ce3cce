#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mhq/checks.hpp"
#include "mhq/potential.hpp"
#include "mhq/quadrature.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Output {
    std::string format = "csv";  // csv|json
    std::string path;            // empty = stdout

    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::filesystem::path target(path);
        std::filesystem::path tmp = target;
        tmp += ".tmp";
        {
            std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
            if (!os) throw std::runtime_error("cannot open " + tmp.string());
            os << text;
        }
        std::filesystem::rename(tmp, target);
    }
};

std::string str(const mhq::Real& x) { return mhq::to_decimal_string(x); }

json base_meta() {
    json meta;
    meta["precision"] = mhq::precision();
    meta["version"] = mhq::kVersion;
    return meta;
}

std::string render_csv(const json& meta, const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    os << "# " << meta.dump() << "\n";
    for (size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << "\n";
    }
    return os.str();
}

std::string render_json(json meta, const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows) {
    json doc;
    doc["meta"] = std::move(meta);
    doc["columns"] = header;
    doc["rows"] = rows;
    return doc.dump(2) + "\n";
}

std::string render(const Output& out, const json& meta, const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
    return out.format == "json" ? render_json(meta, header, rows)
                                : render_csv(meta, header, rows);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    if (out.empty()) throw CLI::ValidationError("--n", "empty list");
    return out;
}

std::vector<mhq::Real> parse_real_list(const std::string& s) {
    std::vector<mhq::Real> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(mhq::parse_real(item));
    if (out.empty()) throw CLI::ValidationError("--c", "empty list");
    return out;
}

// Resolve the symmetric-triple shift from --c / --chat (chat means c = chat*sqrt(n)).
mhq::Real resolve_shift(const std::string& c_str, const std::string& chat_str, int n) {
    if (c_str.empty() == chat_str.empty())
        throw CLI::ValidationError("--c/--chat", "exactly one of --c and --chat is required");
    if (!c_str.empty()) return mhq::parse_real(c_str);
    return mhq::parse_real(chat_str) * sqrt(mhq::Real(n));
}

int run_poly(const std::string& n_str, const std::string& c_str, const Output& out) {
    mhq::MultiIndex n(parse_int_list(n_str));
    mhq::WeightSystem w(parse_real_list(c_str));
    mhq::MonicPoly a = mhq::build_by_recurrence(n, w);
    mhq::MonicPoly b = mhq::build_explicit(n, w);
    mhq::Real diff(0), scale(1);
    for (int i = 0; i <= a.degree(); ++i) {
        diff = std::max(diff, abs(a[i] - b[i]));
        scale = std::max(scale, abs(a[i]));
    }
    json meta = base_meta();
    meta["n"] = n.parts;
    json cs = json::array();
    for (const auto& c : w.shifts()) cs.push_back(str(c));
    meta["c"] = cs;
    meta["degree"] = a.degree();
    meta["cross_method_max_rel_discrepancy"] = str(diff / scale);
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i <= a.degree(); ++i)
        rows.push_back({std::to_string(i), str(a[i]), str(b[i])});
    out.emit(render(out, meta, {"i", "recurrence", "explicit"}, rows));
    return 0;
}

int run_zeros(int n, const std::string& c_str, const std::string& chat_str, const Output& out) {
    mhq::Real c = resolve_shift(c_str, chat_str, n);
    mhq::WeightSystem w = mhq::WeightSystem::symmetric_triple(c);
    mhq::ZeroSet zs = mhq::multi_hermite_zeros(mhq::MultiIndex({n, n, n}), w);
    mhq::LocalizationIntervals L = mhq::bounding_intervals(n, c);
    mhq::IntervalCounts counts = mhq::zero_interval_counts(zs, L);
    json meta = base_meta();
    meta["n"] = n;
    meta["c"] = str(c);
    meta["chat"] = str(c / sqrt(mhq::Real(n)));
    meta["intervals"] = {{"i1", {str(L.lo1), str(L.hi1)}},
                         {"i2", {str(L.lo2), str(L.hi2)}},
                         {"i3", {str(L.lo3), str(L.hi3)}},
                         {"disjoint", L.disjoint}};
    meta["counts"] = {{"i1", counts.k1},
                      {"i2", counts.k2},
                      {"i3", counts.k3},
                      {"outside", counts.outside}};
    std::vector<std::vector<std::string>> rows;
    for (size_t k = 0; k < zs.zeros.size(); ++k)
        rows.push_back({std::to_string(k + 1), str(zs.zeros[k])});
    out.emit(render(out, meta, {"k", "zero"}, rows));
    return 0;
}

int run_rule(int n, const std::string& c_str, const std::string& chat_str, bool raw,
             const Output& out) {
    mhq::Real c = resolve_shift(c_str, chat_str, n);
    mhq::WeightSystem w = mhq::WeightSystem::symmetric_triple(c);
    mhq::QuadratureRule rule = mhq::build_rule(n, w, !raw);
    json meta = base_meta();
    meta["n"] = n;
    meta["c"] = str(c);
    meta["chat"] = str(c / sqrt(mhq::Real(n)));
    meta["normalized"] = !raw;
    std::vector<std::string> header{"k", "node"};
    for (int j = 1; j <= w.r(); ++j) header.push_back("lambda_" + std::to_string(j));
    std::vector<std::vector<std::string>> rows;
    for (int k = 0; k < rule.node_count(); ++k) {
        std::vector<std::string> row{std::to_string(k + 1), str(rule.nodes[k])};
        for (int j = 0; j < w.r(); ++j) row.push_back(str(rule.weights(j, k)));
        rows.push_back(std::move(row));
    }
    out.emit(render(out, meta, header, rows));
    return 0;
}

int run_density(const std::string& chat_str, int samples, const Output& out) {
    mhq::Real chat = mhq::parse_real(chat_str);
    mhq::SupportModel s = mhq::support_intervals(chat);
    auto rows_data = mhq::density_profile(chat, samples);
    bool three = s.phase == mhq::Phase::kThreeInterval;
    json meta = base_meta();
    meta["chat"] = str(chat);
    meta["phase"] = s.phase == mhq::Phase::kOneInterval    ? "one-interval"
                    : s.phase == mhq::Phase::kThreeInterval ? "three-interval"
                                                            : "critical";
    meta["b"] = str(s.b);
    meta["d"] = three ? str(*s.d) : "";
    meta["a"] = three ? str(*s.a) : "";
    meta["cstar"] = mhq::to_decimal_string(mhq::critical_shift(), 20);
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : rows_data) {
        if (three)
            rows.push_back({str(r.x), str(r.v), str(r.nu1), str(r.nu2), str(r.nu3)});
        else
            rows.push_back({str(r.x), str(r.v), "", "", ""});
    }
    out.emit(render(out, meta, {"x", "v", "nu1", "nu2", "nu3"}, rows));
    return 0;
}

int run_transition(const Output& out) {
    json meta = base_meta();
    out.emit(render(out, meta, {"cstar"},
                    {{mhq::to_decimal_string(mhq::critical_shift(), 20)}}));
    return 0;
}

int run_potentials(const std::string& chat_str, int n, const Output& out) {
    mhq::Real chat = mhq::parse_real(chat_str);
    mhq::SupportModel s = mhq::support_intervals(chat);
    if (s.phase != mhq::Phase::kThreeInterval)
        throw std::invalid_argument("potentials need the three-interval phase (chat > c*)");
    std::vector<mhq::SampledMeasure> nu;
    for (int j = 1; j <= 3; ++j) nu.push_back(mhq::sample_component(j, chat, s, 1024));

    mhq::Real c = chat * sqrt(mhq::Real(n));
    mhq::ZeroSet zs =
        mhq::multi_hermite_zeros(mhq::MultiIndex({n, n, n}), mhq::WeightSystem::symmetric_triple(c));
    std::vector<std::vector<mhq::Real>> groups(3);
    for (int k = 0; k < 3 * n; ++k) groups[k / n].push_back(zs.zeros[k]);

    mhq::VariationalReport rep = mhq::variational_report(chat);
    json meta = base_meta();
    meta["chat"] = str(chat);
    meta["n"] = n;
    meta["d"] = str(*s.d);
    meta["a"] = str(*s.a);
    meta["b"] = str(s.b);
    meta["ell"] = {str(rep.ell1), str(rep.ell2), str(rep.ell3)};

    std::vector<std::vector<std::string>> rows;
    int points = 241;
    for (int i = 0; i < points; ++i) {
        mhq::Real x = -s.b - 2 + (2 * s.b + 4) * i / (points - 1);
        mhq::PotentialTriple u = mhq::potentials_at(nu, x);
        mhq::Real combo1 = 2 * u.u1 + u.u2 + u.u3 + x * x + chat * x;
        mhq::Real combo2 = u.u1 + 2 * u.u2 + u.u3 + x * x;
        mhq::Real combo3 = u.u1 + u.u2 + 2 * u.u3 + x * x - chat * x;
        std::vector<std::string> row{str(x), str(u.u1), str(u.u2), str(u.u3)};
        for (int g = 0; g < 3; ++g)
            row.push_back(str(mhq::discrete_potential(groups[g], n, x)));
        row.push_back(str(combo1));
        row.push_back(str(combo2));
        row.push_back(str(combo3));
        rows.push_back(std::move(row));
    }
    out.emit(render(out, meta,
                    {"x", "u_nu1", "u_nu2", "u_nu3", "u_disc1", "u_disc2", "u_disc3",
                     "combo1", "combo2", "combo3"},
                    rows));
    return 0;
}

int run_check(const std::string& suite, const Output& out) {
    auto results = mhq::run_checks(suite);
    json doc;
    doc["meta"] = base_meta();
    doc["meta"]["suite"] = suite;
    json arr = json::array();
    bool all_pass = true;
    for (const auto& r : results) {
        arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        all_pass = all_pass && r.pass;
    }
    doc["criteria"] = arr;
    doc["all_pass"] = all_pass;
    out.emit(doc.dump(2) + "\n");
    if (!all_pass) {
        std::cerr << "check: one or more criteria failed\n";
        return 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiple Hermite polynomials, simultaneous Gaussian quadrature, and "
                 "zero asymptotics"};
    app.require_subcommand(1);
    app.fallthrough();

    unsigned precision = mhq::kDefaultPrecision;
    if (const char* env = std::getenv("MHQUAD_PRECISION")) {
        try {
            precision = static_cast<unsigned>(std::stoul(env));
        } catch (...) {
            std::cerr << "invalid MHQUAD_PRECISION, using default\n";
        }
    }
    Output out;
    app.add_option("--precision", precision, "working precision in decimal digits (>= 30)");
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out.path, "write output to this path (atomic)");

    std::string n_list, c_list, c_str, chat_str, suite = "all";
    int n = 0, samples = 201;
    bool raw = false;

    auto* poly = app.add_subcommand("poly", "monic coefficients, both construction methods");
    poly->add_option("--n", n_list, "multi-index n1,n2,...")->required();
    poly->add_option("--c", c_list, "shifts c1,c2,...")->required();

    auto* zeros = app.add_subcommand("zeros", "zeros of H_(n,n,n) with localization counts");
    zeros->add_option("--n", n, "diagonal index")->required()->check(CLI::PositiveNumber);
    zeros->add_option("--c", c_str, "positive shift of the symmetric triple");
    zeros->add_option("--chat", chat_str, "scaled shift; c = chat*sqrt(n)");

    auto* rule = app.add_subcommand("rule", "simultaneous quadrature nodes and weights");
    rule->add_option("--n", n, "diagonal index")->required()->check(CLI::PositiveNumber);
    rule->add_option("--c", c_str, "positive shift of the symmetric triple");
    rule->add_option("--chat", chat_str, "scaled shift; c = chat*sqrt(n)");
    rule->add_flag("--raw", raw, "raw weights (rows sum to sqrt(pi) e^{c_j^2/4})");

    auto* density = app.add_subcommand("density", "limiting densities v, nu1', nu2', nu3'");
    density->add_option("--chat", chat_str, "scaled shift")->required();
    density->add_option("--samples", samples, "sample count over [-b, b]")
        ->check(CLI::Range(2, 100000));

    auto* transition = app.add_subcommand("transition", "the phase transition point c*");
    (void)transition;

    auto* potentials =
        app.add_subcommand("potentials", "logarithmic potentials and variational combinations");
    potentials->add_option("--chat", chat_str, "scaled shift")->required();
    potentials->add_option("--n", n, "zero count per group for the discrete potentials")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* check = app.add_subcommand("check", "run a verification suite");
    check->add_option("--suite", suite, "identities|table1|asymptotics|all")
        ->check(CLI::IsMember({"identities", "table1", "asymptotics", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    if (precision < mhq::kMinPrecision) {
        std::cerr << "precision must be >= " << mhq::kMinPrecision << "\n";
        return 2;
    }
    mhq::set_precision(precision);

    try {
        if (poly->parsed()) return run_poly(n_list, c_list, out);
        if (zeros->parsed()) return run_zeros(n, c_str, chat_str, out);
        if (rule->parsed()) return run_rule(n, c_str, chat_str, raw, out);
        if (density->parsed()) return run_density(chat_str, samples, out);
        if (transition->parsed()) return run_transition(out);
        if (potentials->parsed()) return run_potentials(chat_str, n, out);
        if (check->parsed()) return run_check(suite, out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const mhq::isolation_error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const mhq::tracking_error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
