// fqzeros: bounds, extremal constructions, zero counting and exhaustive /
// randomized verification for systems of homogeneous polynomials over F_q.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fqzeros/search.hpp"

using json = nlohmann::ordered_json;
using namespace fqzeros;

namespace {

// "3", "1..4" or "1,2,5" -> list of ints
std::vector<int> parse_range(const std::string& s) {
    std::vector<int> out;
    size_t dots = s.find("..");
    if (dots != std::string::npos) {
        int lo = std::stoi(s.substr(0, dots));
        int hi = std::stoi(s.substr(dots + 2));
        for (int v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

struct FamilyFile {
    FieldPtr field;
    int m = 0, d = 0;
    PolyFamily family;
};

FamilyFile read_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    FamilyFile out;
    std::vector<HomPoly> members;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        if (!have_header) {
            long long q = -1;
            int m = -1, d = -1;
            std::stringstream ss(line);
            std::string tok;
            while (ss >> tok) {
                if (tok.rfind("q=", 0) == 0) q = std::stoll(tok.substr(2));
                else if (tok.rfind("m=", 0) == 0) m = std::stoi(tok.substr(2));
                else if (tok.rfind("d=", 0) == 0) d = std::stoi(tok.substr(2));
                else throw ParseError("line " + std::to_string(lineno) +
                                      ": bad header token '" + tok + "'");
            }
            if (q < 0 || m < 0 || d < 0)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": header must be 'q=<q> m=<m> d=<d>'");
            out.field = Field::make(uint32_t(q));
            out.m = m;
            out.d = d;
            have_header = true;
            continue;
        }
        try {
            Poly f = poly_parse(out.field, out.m + 1, line);
            members.emplace_back(std::move(f), out.d);
        } catch (const Error& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!have_header) throw ParseError(path + ": missing 'q= m= d=' header");
    if (members.empty()) throw ParseError(path + ": no polynomials");
    out.family = PolyFamily::make(std::move(members));
    return out;
}

json bound_row(const BoundParams& p) {
    json row;
    row["q"] = p.q;
    row["d"] = p.d;
    row["m"] = p.m;
    row["r"] = p.r;
    auto cell = [&](auto fn) -> json {
        try {
            return fn(p);
        } catch (const Error&) {
            return nullptr;
        }
    };
    row["tb_general"] = cell(tb_bound_general);
    row["tb_explicit"] = cell(tb_bound_explicit);
    row["hp_general"] = cell(hp_bound_general);
    row["hp_explicit"] = cell(hp_bound_explicit);
    row["serre"] = serre_bound(p.q, p.d, p.m);
    try {
        row["conjecture"] = conjecture_bound(p);
    } catch (const Error&) {
        row["conjecture"] = nullptr;
    }
    BoundValidity v = bound_validity(p);
    row["tbc_hypothesis"] = v.tbc_hypothesis;
    row["hp_hypothesis"] = v.hp_hypothesis;
    row["serre_hypothesis"] = v.serre_hypothesis;
    return row;
}

std::string cell(const json& v) {
    if (v.is_null()) return "n/a";
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    std::stringstream ss;
    ss << v;
    return ss.str();
}

void print_rows(const std::vector<json>& rows, const std::string& format,
                std::ostream& os) {
    if (rows.empty()) return;
    if (format == "json") {
        os << json(rows).dump(2) << "\n";
        return;
    }
    std::vector<std::string> cols;
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it)
        cols.push_back(it.key());
    if (format == "csv") {
        for (size_t i = 0; i < cols.size(); ++i)
            os << (i ? "," : "") << cols[i];
        os << "\n";
        for (const json& row : rows) {
            for (size_t i = 0; i < cols.size(); ++i)
                os << (i ? "," : "") << cell(row.at(cols[i]));
            os << "\n";
        }
        return;
    }
    // aligned text
    std::vector<size_t> width(cols.size());
    for (size_t i = 0; i < cols.size(); ++i) width[i] = cols[i].size();
    for (const json& row : rows)
        for (size_t i = 0; i < cols.size(); ++i)
            width[i] = std::max(width[i], cell(row.at(cols[i])).size());
    auto emit = [&](const std::function<std::string(size_t)>& get) {
        for (size_t i = 0; i < cols.size(); ++i) {
            std::string s = get(i);
            os << s << std::string(width[i] - s.size() + 2, ' ');
        }
        os << "\n";
    };
    emit([&](size_t i) { return cols[i]; });
    for (const json& row : rows)
        emit([&](size_t i) { return cell(row.at(cols[i])); });
}

json witness_json(const Witness& w, const FieldPtr& field, int m, int d) {
    PolyFamily fam = family_from_rows(field, m, d, w.rows);
    json out;
    out["polynomials"] = json::array();
    for (const HomPoly& h : fam.members)
        out["polynomials"].push_back(poly_to_string(h.poly()));
    out["has_common_linear_factor"] = w.has_common_linear_factor;
    return out;
}

json report_json(const SearchReport& rep, const FieldPtr& field) {
    json out;
    out["params"] = {{"q", rep.params.q}, {"d", rep.params.d},
                     {"m", rep.params.m}, {"r", rep.params.r}};
    out["mode"] = rep.mode;
    out["spaces_examined"] = rep.spaces_examined;
    out["max_count"] = rep.max_count;
    out["bound"] = rep.bound;
    out["verdict"] = verdict_name(rep.verdict);
    if (rep.mode == "random" || rep.mode == "conjecture") out["seed"] = rep.seed;
    if (rep.mode == "conjecture") out["best_directed_count"] = rep.best_directed_count;
    if (rep.mode == "exhaustive")
        out["all_witnesses_have_linear_factor"] = rep.all_witnesses_have_linear_factor;
    out["witnesses"] = json::array();
    for (const Witness& w : rep.witnesses)
        out["witnesses"].push_back(witness_json(w, field, rep.params.m, rep.params.d));
    return out;
}

json profile_json(const CorrelationProfile& prof) {
    json out;
    out["b"] = prof.b;
    out["gcd"] = poly_to_string(prof.overall_gcd.poly());
    out["pairwise"] = prof.pairwise;
    out["cofactors"] = json::array();
    for (const HomPoly& g : prof.cofactors)
        out["cofactors"].push_back(poly_to_string(g.poly()));
    out["case"] = correlation_case_name(prof.kase);
    if (prof.case3_b) out["case3_b"] = *prof.case3_b;
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Zero counts of systems of homogeneous polynomials over F_q: "
                 "bounds, extremal constructions, exhaustive and randomized checks"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    long long q = 2;
    int d = 1, m = 2;
    std::string r_spec, d_spec, m_spec, q_spec;

    auto* bound = app.add_subcommand("bound", "Tabulate the bounds for a parameter grid");
    bound->add_option("--q", q, "Field size (prime power)")->required();
    bound->add_option("--d", d, "Degree")->required();
    bound->add_option("--m", m, "Projective dimension");
    bound->add_option("--r", r_spec, "System rank, e.g. 2 or 1..3 (default 1..m+1)");

    auto* construct = app.add_subcommand("construct", "Emit an extremal family with its certificate");
    std::string kind = "tb_maximal";
    std::string lambdas_spec;
    construct->add_option("--family", kind, "Which construction")
        ->check(CLI::IsMember({"tb_maximal", "line", "fermat"}));
    construct->add_option("--q", q)->required();
    construct->add_option("--d", d);
    construct->add_option("--m", m);
    int r = 1;
    construct->add_option("--r", r);
    construct->add_option("--lambdas", lambdas_spec,
                          "Comma-separated element indices for tb_maximal");

    std::string file;
    auto* count = app.add_subcommand("count", "Count the common zeros of a family file");
    count->add_option("file", file, "Family file: 'q=<q> m=<m> d=<d>' header, one polynomial per line")
        ->required();

    auto* classify = app.add_subcommand("classify", "Correlation profile of a family file");
    classify->add_option("file", file)->required();

    auto* search = app.add_subcommand("search", "Maximize the zero count over rank-r systems");
    std::string mode = "exhaustive";
    long long budget = 2'000'000'000, samples = 100000;
    uint64_t seed = 1;
    int witnesses = 8;
    search->add_option("--q", q)->required();
    search->add_option("--d", d)->required();
    search->add_option("--m", m)->required();
    search->add_option("--r", r)->required();
    search->add_option("--mode", mode)
        ->check(CLI::IsMember({"exhaustive", "random", "conjecture", "affine"}));
    search->add_option("--budget", budget, "Cap on subspaces x points");
    search->add_option("--samples", samples, "Random samples (random/conjecture modes)");
    search->add_option("--seed", seed);
    search->add_option("--witnesses", witnesses, "Witnesses to keep");

    auto* verify = app.add_subcommand("verify", "Exhaustive check of the T_r bound; exit 0 Match, 2 Below, 3 Exceeds, 4 budget");
    verify->add_option("--q", q)->required();
    verify->add_option("--d", d)->required();
    verify->add_option("--m", m)->required();
    verify->add_option("--r", r)->required();
    verify->add_option("--budget", budget);

    auto* table = app.add_subcommand("table", "Bound/verification grid as CSV");
    bool with_verify = false;
    table->add_option("--q", q_spec, "Field sizes, e.g. 2,3,4")->required();
    table->add_option("--d", d_spec, "Degrees, e.g. 1..2")->required();
    table->add_option("--m", m_spec, "Dimensions")->required();
    table->add_option("--r", r_spec, "Ranks")->required();
    table->add_flag("--verify", with_verify, "Add an exhaustive-verdict column");
    table->add_option("--budget", budget);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*bound) {
            auto field = Field::make(uint32_t(q));  // validate q first
            (void)field;
            std::vector<int> rs = r_spec.empty()
                ? [&] { std::vector<int> v; for (int i = 1; i <= m + 1; ++i) v.push_back(i); return v; }()
                : parse_range(r_spec);
            std::vector<json> rows;
            for (int rr : rs) rows.push_back(bound_row({q, d, m, rr}));
            print_rows(rows, format, std::cout);
        } else if (*construct) {
            auto field = Field::make(uint32_t(q));
            Construction c;
            if (kind == "tb_maximal") {
                std::optional<std::vector<FieldElem>> lam;
                if (!lambdas_spec.empty()) {
                    std::vector<FieldElem> v;
                    for (int idx : parse_range(lambdas_spec)) v.push_back({uint16_t(idx)});
                    lam = std::move(v);
                }
                c = tb_maximal_family(field, {q, d, m, r}, std::move(lam));
            } else if (kind == "line") {
                c = line_family(field, d, r);
            } else {
                c = fermat_family(field, m, r);
            }
            std::cout << "q=" << q << " m=" << c.family.m() << " d=" << c.family.d() << "\n";
            for (const HomPoly& h : c.family.members)
                std::cout << poly_to_string(h.poly()) << "\n";
            json cert;
            cert["params"] = {{"q", q}, {"d", c.family.d()}, {"m", c.family.m()},
                              {"r", c.family.r()}};
            cert["counted"] = c.cert.counted;
            cert["count"] = c.cert.counted ? json(c.cert.count) : json(nullptr);
            cert["bound"] = c.cert.expected;
            cert["match"] = c.cert.match;
            std::cout << cert.dump(2) << "\n";
        } else if (*count) {
            FamilyFile ff = read_family_file(file);
            ZeroCount zc = count_proj_zeros(ff.family);
            json out;
            out["params"] = {{"q", ff.field->q()}, {"d", ff.d}, {"m", ff.m},
                             {"r", ff.family.r()}};
            out["projective"] = zc.projective;
            out["on_hyperplane"] = zc.on_hyperplane;
            out["affine"] = zc.affine;
            out["rank"] = ff.family.rank;
            if (ff.family.r() >= 2 && ff.d >= 2 && ff.family.rank == ff.family.r())
                out["correlation_case"] =
                    correlation_case_name(correlation_profile(ff.family).kase);
            BoundParams p{(long long)ff.field->q(), ff.d, ff.m, ff.family.r()};
            out["tb_bound"] = tb_bound_general(p);
            out["annotation"] = zc.projective == out["tb_bound"].get<long long>()
                                    ? "Match" : (zc.projective < out["tb_bound"].get<long long>()
                                                     ? "BelowBound" : "ExceedsBound");
            if (format == "json") {
                std::cout << out.dump(2) << "\n";
            } else {
                for (auto it = out.begin(); it != out.end(); ++it)
                    std::cout << it.key() << ": " << cell(it.value()) << "\n";
            }
        } else if (*classify) {
            FamilyFile ff = read_family_file(file);
            std::cout << profile_json(correlation_profile(ff.family)).dump(2) << "\n";
        } else if (*search) {
            auto field = Field::make(uint32_t(q));
            SearchOptions opts;
            opts.budget = budget;
            opts.max_witnesses = witnesses;
            BoundParams p{q, d, m, r};
            SearchReport rep;
            try {
                if (mode == "exhaustive") rep = exhaustive_max(field, p, opts);
                else if (mode == "affine") rep = exhaustive_affine_max(field, p, opts);
                else if (mode == "random")
                    rep = random_probe(field, p, samples, seed, BoundKind::TB, opts);
                else rep = conjecture_probe(field, p, samples, seed, opts);
            } catch (const BudgetExceeded& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 4;
            }
            if (format == "csv") {
                std::cout << "q,d,m,r,mode,spaces_examined,max_count,bound,verdict\n"
                          << q << "," << d << "," << m << "," << r << "," << rep.mode
                          << "," << rep.spaces_examined << "," << rep.max_count << ","
                          << rep.bound << "," << verdict_name(rep.verdict) << "\n";
            } else {
                std::cout << report_json(rep, field).dump(2) << "\n";
            }
        } else if (*verify) {
            auto field = Field::make(uint32_t(q));
            SearchOptions opts;
            opts.budget = budget;
            SearchReport rep;
            try {
                rep = exhaustive_max(field, {q, d, m, r}, opts);
            } catch (const BudgetExceeded& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 4;
            }
            std::cout << "max_count=" << rep.max_count << " bound=" << rep.bound
                      << " verdict=" << verdict_name(rep.verdict) << "\n";
            if (r == 1 && d >= 1) {
                try {
                    SerreAuditReport audit = serre_sharpness_audit(field, d, m, opts);
                    std::cout << "serre_audit: maximizers=" << audit.maximizer_count
                              << " split=" << (audit.all_split_into_distinct_linear_forms ? "yes" : "no")
                              << " collinear=" << (audit.all_dual_points_collinear ? "yes" : "no")
                              << "\n";
                } catch (const OutOfValidity&) {
                    // d > q+1: Serre sharpness does not apply
                }
            }
            if (rep.verdict == Verdict::BelowBound) return 2;
            if (rep.verdict == Verdict::ExceedsBound) return 3;
            return 0;
        } else if (*table) {
            std::vector<json> rows;
            for (int qq : parse_range(q_spec)) {
                auto field = Field::make(uint32_t(qq));
                for (int dd : parse_range(d_spec))
                    for (int mm : parse_range(m_spec))
                        for (int rr : parse_range(r_spec)) {
                            BoundParams p{qq, dd, mm, rr};
                            json row = bound_row(p);
                            if (with_verify) {
                                try {
                                    SearchOptions opts;
                                    opts.budget = budget;
                                    SearchReport rep = exhaustive_max(field, p, opts);
                                    row["verify"] = verdict_name(rep.verdict);
                                } catch (const BudgetExceeded&) {
                                    row["verify"] = "skipped(budget)";
                                } catch (const OutOfValidity&) {
                                    row["verify"] = "n/a";
                                }
                            }
                            rows.push_back(std::move(row));
                        }
            }
            print_rows(rows, format == "text" ? "csv" : format, std::cout);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
