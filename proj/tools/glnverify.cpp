// glnverify: command-line front end.  Every run prints one JSON report on
// stdout; exit status 0 = all checks pass, 1 = some check failed,
// 2 = usage error.

#include "gln/fourd.hpp"
#include "gln/hamiltonian.hpp"
#include "gln/jackson.hpp"
#include "gln/nekrasov.hpp"
#include "gln/parallel.hpp"
#include "gln/rmatrix.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

using namespace gln;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json exps_json(const Exps& e) { return json(e); }

json defect_json(const DefectReport& d) {
    json j;
    j["zero"] = d.zero;
    j["nonzero_per_degree"] = d.nonzero_per_degree;
    if (!d.zero) {
        j["first_exponent"] = exps_json(d.first);
        j["first_value"] = d.first_value;
    }
    return j;
}

// Collects per-check results.
class Report {
public:
    Report(std::string command, std::uint64_t seed, Mode mode) {
        doc_["command"] = std::move(command);
        doc_["seed"] = seed;
        doc_["mode"] = mode_name(mode);
        doc_["prime_field_modulus"] = std::to_string(ModP::P) + " (2^61 - 1, fixed)";
        doc_["threads"] = thread_count();
        doc_["parameters"] = json::object();
        doc_["checks"] = json::array();
    }

    json& params() { return doc_["parameters"]; }
    json& doc() { return doc_; }

    void check(const std::string& name, bool pass, json failure = nullptr) {
        json c;
        c["name"] = name;
        c["status"] = pass ? "pass" : "fail";
        if (!pass) c["failure"] = failure.is_null() ? json("") : std::move(failure);
        if (!pass) ok_ = false;
        doc_["checks"].push_back(std::move(c));
    }
    void skipped(const std::string& name, const std::string& why) {
        doc_["checks"].push_back({{"name", name}, {"status", "skipped"}, {"reason", why}});
    }
    void op_checks(const std::vector<OpCheck>& v) {
        for (const auto& c : v) check(c.name, c.pass, c.detail);
    }

    int finish(std::chrono::steady_clock::time_point t0) {
        doc_["status"] = ok_ ? "pass" : "fail";
        doc_["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << doc_.dump(2) << "\n";
        return ok_ ? 0 : 1;
    }

private:
    json doc_;
    bool ok_ = true;
};

template <Field F>
json coefficient_table(const Series<F>& s) {
    json rows = json::array();
    for (const auto& [e, v] : s.terms()) rows.push_back({{"exponent", e}, {"value", v.str()}});
    return rows;
}

template <Field F>
json matrix_json(const Matrix<F>& A) {
    json rows = json::array();
    for (int r = 0; r < A.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < A.cols(); ++c) row.push_back(A(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

// ------------------------------------------------------------ partition-function

struct PfArgs {
    int n = 1, degree = 4;
    std::uint64_t seed = 1;
    std::string type = "sinh", mode = "rational", out;
};

template <Field F>
void run_partition_function(const PfArgs& a, Report& rep) {
    auto p = random_laumon_params<F>(a.seed, a.n);
    LaumonOptions o;
    o.variant = a.type == "sinh" ? LaumonVariant::Definition : LaumonVariant::BoxPoch;
    auto Z = laumon(p, a.degree, o);
    json table = {{"n", a.n}, {"degree", a.degree}, {"seed", a.seed}, {"type", a.type},
                  {"mode", a.mode}, {"coefficients", coefficient_table(Z)}};
    if (a.n == 1 && a.type == "sinh") {
        auto d = compare_series(Z, gl1_partition_closed(p, a.degree));
        rep.check("gl1 product formula", d.zero, defect_json(d));
    }
    if (a.type == "sinh") {
        auto d = compare_series(Z, laumon(p, a.degree, {LaumonVariant::BoxSinh, false}));
        rep.check("box presentation = definition", d.zero, defect_json(d));
    }
    rep.check("constant term is 1", Z.coeff(Exps(a.n, 0)) == F(1));
    rep.doc()["terms"] = Z.terms().size();
    if (a.out.empty()) {
        rep.doc()["table"] = table;
    } else {
        std::ofstream f(a.out);
        if (!f) throw UsageError("cannot write " + a.out);
        f << table.dump(2) << "\n";
        rep.doc()["table_file"] = a.out;
    }
}

// ------------------------------------------------------------ verify

struct VerifyArgs {
    int n = 1, degree = 4;
    std::uint64_t seed = 1;
    std::string form = "normal", mode = "rational";
};

template <Field F>
void run_verify(const VerifyArgs& a, Report& rep) {
    auto p = sample_params<F>(a.seed, a.n);
    json sp;
    sp["sqrt_q"] = p.sqrt_q.str();
    sp["sqrt_kappa"] = p.sqrt_kappa.str();
    for (auto [name, v] : {std::pair{"sqrt_b", &p.sqrt_b}, {"sqrt_d", &p.sqrt_d}, {"sqrt_dbar", &p.sqrt_dbar}}) {
        json arr = json::array();
        for (const auto& x : *v) arr.push_back(x.str());
        sp[name] = arr;
    }
    rep.params()["sampled"] = sp;
    auto r = verify_conjecture(p, a.degree, parse_form(a.form));
    rep.doc()["psi_terms"] = r.psi_terms;
    rep.doc()["defect_per_degree"] = r.defect.nonzero_per_degree;
    rep.check("H psi = psi through degree " + std::to_string(a.degree), r.defect.zero, defect_json(r.defect));
}

// ------------------------------------------------------------ rmatrix

struct RArgs {
    int n = 2, m_total = 2;
    std::uint64_t seed = 1;
    bool emit = false;
    std::string mode = "rational";
};

template <Field F>
void run_rmatrix(const RArgs& a, Report& rep) {
    auto s = sample_rspec<F>(a.seed, a.n, a.m_total);
    auto I = s.index();
    auto Rx = r_closed(s), Rc = r_via_connection(s);
    auto d = matrix_diff(Rx, Rc, I);
    rep.check("closed form = connection solve", d.equal, d.first);
    rep.check("connection solve = generic elimination", Rc == r_via_elimination(s));
    rep.check("inverse of the B_2 specialization", (B2_inverse_closed(s) * base_matrix(2, s)).is_identity());
    rep.check("B_2 specialization", base_matrix(2, s) == B2_closed(s));
    rep.check("connection residual at random points", connection_residual_zero(s, Rc, a.seed, 3));
    rep.check("change of Lambda", lambda_change_holds(s, s.Lam * F(5), a.seed));
    int zeros = 0;
    for (int r = 0; r < Rx.rows(); ++r)
        for (int c = 0; c < Rx.cols(); ++c) zeros += Rx(r, c).is_zero();
    rep.doc()["zero_entries"] = zeros;
    rep.skipped("weight-block zero pattern",
                "R acts within a fixed total weight; its entries in the I_M basis are generically all nonzero");
    rep.doc()["size"] = Rx.rows();
    json idx = json::array();
    for (const auto& i : I) idx.push_back(i);
    rep.doc()["index"] = idx;
    if (a.emit) rep.doc()["matrix"] = matrix_json(Rx);
}

// ------------------------------------------------------------ props

struct PropsArgs {
    std::string suite;
    std::uint64_t seed = 1;
    std::string mode = "prime-field";
    std::vector<int> m{2, 1, 1};
};

template <Field F>
void suite_pentagon(const PropsArgs& a, Report& rep) {
    rep.op_checks(check_pentagon(sample_params<F>(a.seed, 3), 4));
    for (int N = 2; N <= 3; ++N) {
        auto p = sample_params<F>(a.seed, N);
        rep.op_checks({check_torus_representation(p, 4, Var::Hat, a.seed),
                       check_torus_representation(p, 4, Var::Check, a.seed)});
    }
}

template <Field F>
void suite_forms(const PropsArgs& a, Report& rep) {
    for (int N = 2; N <= 4; ++N) rep.op_checks(check_form_equivalence(sample_params<F>(a.seed, N), 3));
}

template <Field F>
void suite_dynkin(const PropsArgs& a, Report& rep) {
    for (int N = 3; N <= 4; ++N) {
        auto p = sample_params<F>(a.seed, N);
        rep.op_checks(check_dynkin(p, 3));
        rep.op_checks(check_alternative_forms(N, p.sqrt_q, 2));
    }
    for (int n = 2; n <= 4; ++n) {
        std::vector<F> x;
        for (int i = 0; i < n; ++i) x.push_back(F(i + 2) / F(2 * i + 3));
        auto c = classical_factorization_check(x, F(5) / F(7));
        rep.check("classical cyclic factorization n=" + std::to_string(n), c.factorization && c.first_factor_form);
    }
}

template <Field F>
void suite_appendixA(const PropsArgs& a, Report& rep) {
    rep.op_checks({check_gl2_symmetric(sample_params<F>(a.seed, 2), 5)});
}

template <Field F>
void suite_appendixC(const PropsArgs& a, Report& rep) {
    for (int N = 2; N <= 3; ++N) {
        auto lp = random_laumon_params<F>(a.seed, N);
        std::string t = " N=" + std::to_string(N);
        auto d1 = check_poch_sinh_relation(lp, 2, false), d2 = check_poch_sinh_relation(lp, 2, true);
        rep.check("poch vs sinh" + t, d1.zero, defect_json(d1));
        rep.check("poch vs sinh, pure" + t, d2.zero, defect_json(d2));
        for (const auto& r : check_factor_relations<F>(N, a.seed, 100))
            rep.check(r.name + t, r.failed == 0, {{"failed", r.failed}, {"of", r.checked}, {"first", r.first_failure}});
    }
    auto i1 = check_inversion_symmetry(random_laumon_params<F>(a.seed, 1), 4);
    auto i2 = check_inversion_symmetry(random_laumon_params<F>(a.seed, 2), 3);
    rep.check("inversion symmetry N=1 D=4", i1.zero, defect_json(i1));
    rep.check("inversion symmetry N=2 D=3", i2.zero, defect_json(i2));
    rep.skipped("infinite-product form", "regularized [u;t]_inf is not implemented; finite ratios are checked instead");
}

template <Field F>
void suite_combinatorics(const PropsArgs& a, Report& rep) {
    const auto& m = a.m;
    const int N = (int)m.size();
    for (int v : m)
        if (v < 0) throw UsageError("--m entries must be nonnegative");
    long M = 0;
    for (int v : m) M += v;
    auto S = support_set(m);
    rep.check("|S(m)| = C(M+N-1, N-1)", (long)S.size() == binomial(M + N - 1, N - 1),
              {{"size", S.size()}, {"expected", binomial(M + N - 1, N - 1)}});
    json pts = json::array();
    for (const auto& t : S) pts.push_back(t);
    rep.doc()["support"] = pts;
    if (N == 3) {
        json vs = json::array();
        for (const auto& v : triangle_vertices(m)) vs.push_back(v);
        rep.doc()["triangle_vertices"] = vs;
    }
    bool counts = true;
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= 6; ++k)
            for (const auto& mm : compositions(n, k)) counts = counts && (long)support_set(mm).size() == binomial(k + n - 1, n - 1);
    rep.check("|S(m)| for all m with M <= 6, N <= 5", counts);
    if (N >= 2 && M <= 4) {
        auto r = check_mass_truncated(sample_params<F>(a.seed, N), m, std::min<int>(4, 2 + (int)M));
        rep.check("terminated support inside the polyhedron", r.support_ok, r.support_detail);
        rep.check("terminated equation", r.equation.zero, defect_json(r.equation));
    }
    rep.check("rank 10 for N=3, M=3", support_set({1, 1, 1}).size() == 10 && compositions(3, 3).size() == 10);
    bool resid = true;
    for (const auto& t : enumerate_tuples(3, 4)) resid = resid && column_residue_exponents(t, 3) == relative(colored_counts(t, 3));
    rep.check("shifted residues = colored counts mod Lambda (N=3)", resid);
}

template <Field F>
void suite_jackson(const PropsArgs& a, Report& rep) {
    for (auto [N, M, want] : std::vector<std::tuple<int, int, int>>{{2, 1, 2}, {2, 2, 3}, {3, 2, 6}, {2, 0, 1}}) {
        int r = cocycle_rank<F>(N, M, a.seed);
        rep.check("cocycle rank (" + std::to_string(N) + "," + std::to_string(M) + ")", r == want,
                  {{"rank", r}, {"expected", want}});
    }
    for (int N = 2; N <= 3; ++N)
        for (int M = 1; M <= 3; ++M) {
            auto s = sample_cocycle_spec<F>(a.seed, N, M);
            std::vector<F> z;
            for (int i = 0; i < M; ++i) z.push_back(F(2 * i + 3) / F(5 + i));
            bool sym = true, poly = true;
            for (const auto& r : compositions(N, M)) {
                sym = sym && cocycle_symmetric(s, r, z);
                poly = poly && cocycle_is_polynomial(s, r, a.seed);
            }
            std::string t = " N=" + std::to_string(N) + " M=" + std::to_string(M);
            rep.check("symmetric under z-permutations" + t, sym);
            rep.check("Vandermonde division exact" + t, poly);
        }
}

void suite_4d(const PropsArgs& a, Report& rep) {
    auto j = check_jet_expansions(a.seed, 200);
    rep.check("pochhammer jet expansions (200)", j.pass, j.first_failure);
    auto k = check_k_difference(a.seed, 200);
    rep.check("K1 - K2", k.pass, k.first_failure);
    for (int N = 2; N <= 3; ++N) {
        auto l = check_lemma_cr(N, a.seed, 50);
        rep.check("C^{-1}R transport N=" + std::to_string(N), l.pass, l.first_failure);
    }
    auto p1 = sample_additive(a.seed, 1);
    auto g = compare_series(laumon_4d(p1, 6), gl1_4d_closed(p1, 6));
    rep.check("gl1 4d closed form", g.zero, defect_json(g));
    for (auto [N, D] : std::vector<std::pair<int, int>>{{2, 5}, {3, 4}}) {
        auto r = fst_check(sample_additive(a.seed, N), D);
        rep.check("FST annihilation N=" + std::to_string(N) + " D=" + std::to_string(D), r.defect.zero,
                  defect_json(r.defect));
    }
}

template <Field F>
void run_props(const PropsArgs& a, Report& rep) {
    const auto& s = a.suite;
    if (s == "pentagon") suite_pentagon<F>(a, rep);
    else if (s == "forms") suite_forms<F>(a, rep);
    else if (s == "dynkin") suite_dynkin<F>(a, rep);
    else if (s == "appendixA") suite_appendixA<F>(a, rep);
    else if (s == "appendixC") suite_appendixC<F>(a, rep);
    else if (s == "combinatorics") suite_combinatorics<F>(a, rep);
    else if (s == "jackson") suite_jackson<F>(a, rep);
    else if (s == "4d") suite_4d(a, rep);
    else throw UsageError("unknown suite " + s);
}

template <class Fn>
void dispatch(Mode m, Fn&& fn) {
    if (m == Mode::Rational) fn(Rational{});
    else fn(ModP{});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the affine gl_N difference Hamiltonian and related identities"};
    app.require_subcommand(1);
    const std::vector<std::string> modes{"rational", "prime-field"};

    PfArgs pf;
    auto* c_pf = app.add_subcommand("partition-function", "Laumon partition function coefficient table");
    c_pf->add_option("--n", pf.n, "rank N")->check(CLI::PositiveNumber);
    c_pf->add_option("--degree", pf.degree, "total degree cap")->check(CLI::NonNegativeNumber);
    c_pf->add_option("--seed", pf.seed, "parameter seed");
    c_pf->add_option("--type", pf.type, "sinh or poch")->check(CLI::IsMember({"sinh", "poch"}));
    c_pf->add_option("--mode", pf.mode, "rational or prime-field")->check(CLI::IsMember(modes));
    c_pf->add_option("--out", pf.out, "write the coefficient table to this file");

    VerifyArgs va;
    auto* c_v = app.add_subcommand("verify", "check H psi = psi degree by degree");
    c_v->add_option("--n", va.n, "rank N")->check(CLI::PositiveNumber);
    c_v->add_option("--degree", va.degree, "total degree cap")->check(CLI::NonNegativeNumber);
    c_v->add_option("--seed", va.seed, "parameter seed");
    c_v->add_option("--form", va.form, "simple, higher or normal")->check(CLI::IsMember({"simple", "higher", "normal"}));
    c_v->add_option("--mode", va.mode, "rational or prime-field")->check(CLI::IsMember(modes));

    RArgs ra;
    auto* c_r = app.add_subcommand("rmatrix", "mass-truncated R-matrix and its cross-checks");
    c_r->add_option("--n", ra.n, "rank N")->check(CLI::PositiveNumber);
    c_r->add_option("--m-total", ra.m_total, "total mass M")->check(CLI::NonNegativeNumber);
    c_r->add_option("--seed", ra.seed, "parameter seed");
    c_r->add_flag("--emit-matrix", ra.emit, "include the matrix in the report");
    c_r->add_option("--mode", ra.mode, "rational or prime-field")->check(CLI::IsMember(modes));

    PropsArgs pa;
    auto* c_p = app.add_subcommand("props", "property suites");
    c_p->add_option("--suite", pa.suite, "pentagon|forms|dynkin|appendixA|appendixC|combinatorics|4d|jackson")
        ->required()
        ->check(CLI::IsMember({"pentagon", "forms", "dynkin", "appendixA", "appendixC", "combinatorics", "4d", "jackson"}));
    c_p->add_option("--seed", pa.seed, "parameter seed");
    c_p->add_option("--mode", pa.mode, "rational or prime-field")->check(CLI::IsMember(modes));
    c_p->add_option("--m", pa.m, "mass vector for the combinatorics suite")->expected(1, 8);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    try {
        if (*c_pf) {
            Mode m = parse_mode(pf.mode);
            Report rep("partition-function", pf.seed, m);
            rep.params() = {{"n", pf.n}, {"degree", pf.degree}, {"type", pf.type}, {"out", pf.out}};
            dispatch(m, [&](auto tag) { run_partition_function<decltype(tag)>(pf, rep); });
            return rep.finish(t0);
        }
        if (*c_v) {
            Mode m = parse_mode(va.mode);
            Report rep("verify", va.seed, m);
            rep.params() = {{"n", va.n}, {"degree", va.degree}, {"form", va.form}};
            dispatch(m, [&](auto tag) { run_verify<decltype(tag)>(va, rep); });
            return rep.finish(t0);
        }
        if (*c_r) {
            Mode m = parse_mode(ra.mode);
            Report rep("rmatrix", ra.seed, m);
            rep.params() = {{"n", ra.n}, {"m_total", ra.m_total}, {"emit_matrix", ra.emit}};
            dispatch(m, [&](auto tag) { run_rmatrix<decltype(tag)>(ra, rep); });
            return rep.finish(t0);
        }
        Mode m = parse_mode(pa.mode);
        Report rep("props", pa.seed, m);
        rep.params() = {{"suite", pa.suite}, {"m", pa.m}};
        if (pa.suite == "4d") rep.params()["note"] = "4d suite always runs in rational jets";
        dispatch(m, [&](auto tag) { run_props<decltype(tag)>(pa, rep); });
        return rep.finish(t0);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
