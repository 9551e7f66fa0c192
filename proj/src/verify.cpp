#include "fsprim/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "fsprim/finsetcat.hpp"
#include "fsprim/fsfilt.hpp"

namespace fsprim {

namespace {

using json = nlohmann::json;

json class_diff(const BiSchurClass& lhs, const BiSchurClass& rhs)
{
    // First (lambda, mu) in canonical order whose coefficients differ.
    BiSchurClass diff = lhs - rhs;
    if (diff.is_zero()) return nullptr;
    const auto& [key, c] = *diff.terms().begin();
    return {{"lambda", key.first.parts()},
            {"mu", key.second.parts()},
            {"lhs", lhs.coefficient(key.first, key.second)},
            {"rhs", rhs.coefficient(key.first, key.second)}};
}

// Sweep helper: the first failing cell decides expected/computed.
class Sweep {
public:
    explicit Sweep(CheckReport& r) : report_(r) {}

    void cell() { ++cells_; }

    void fail(json params, json expected, json computed)
    {
        if (failed_) return;
        failed_ = true;
        report_.expected = {{"cell", params}, {"value", std::move(expected)}};
        report_.computed = {{"cell", std::move(params)}, {"value", std::move(computed)}};
    }

    void compare(json params, const BiSchurClass& expected, const BiSchurClass& computed)
    {
        cell();
        if (expected == computed) return;
        json where = std::move(params);
        where["first_difference"] = class_diff(computed, expected);
        fail(std::move(where), to_json(expected), to_json(computed));
    }

    void finish()
    {
        report_.params["cells"] = cells_;
        if (failed_) {
            report_.status = Status::fail;
        } else if (cells_ == 0) {
            report_.status = Status::vacuous;
        } else {
            report_.status = Status::pass;
            report_.expected = std::to_string(cells_) + " cells";
            report_.computed = report_.expected;
        }
    }

private:
    CheckReport& report_;
    long cells_ = 0;
    bool failed_ = false;
};

CheckReport timed(const std::function<CheckReport()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    CheckReport r = body();
    r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

CheckReport make(const std::string& id, json params) { return CheckReport{id, std::move(params), Status::vacuous, nullptr, nullptr, {}, 0.0}; }

BiSchurClass row_strip(const BiSchurClass& x, int l) { return biconvolution_right(x, SchurClass::of(Partition::row(l))); }

SparseVector act(const SignedPermutation& g, const SparseVector& v)
{
    SparseVector out;
    for (const auto& [r, x] : v) out.emplace_back(g.image(r), g.sign(r) > 0 ? x : -x);
    std::sort(out.begin(), out.end(), [](const SparseEntry& l, const SparseEntry& r) { return l.first < r.first; });
    return out;
}

} // namespace

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::vacuous: return "vacuous";
    }
    return "?";
}

json to_json(const CheckReport& r, bool with_timing)
{
    json j = {{"id", r.id}, {"params", r.params}, {"status", std::string(to_string(r.status))},
              {"expected", r.expected}, {"computed", r.computed}};
    if (!r.note.empty()) j["note"] = r.note;
    if (with_timing) j["elapsed"] = r.elapsed;
    return j;
}

json to_json(const std::vector<CheckReport>& rs, bool with_timing)
{
    json out = json::array();
    for (const auto& r : rs) out.push_back(to_json(r, with_timing));
    return out;
}

// --- Class identities ------------------------------------------------------

BiSchurClass primfs_lhs(int b, int a)
{
    BiSchurClass x = primitives_decompose(b, a);
    if (b > a) x.add(Partition::column(a), Partition::column(b), (b - a) % 2 == 0 ? 1 : -1);
    return x;
}

BiSchurClass primfs_rhs(int b, int a)
{
    BiSchurClass x;
    for (int t = 0; t <= b - a; ++t)
        x += ((t % 2 == 0) ? 1 : -1) * biconvolution_right(fs_decompose(b - t, a), SchurClass::of(Partition::column(t)));
    return x;
}

BiSchurClass kring_lhs(int b, int a)
{
    BiSchurClass x;
    for (int l = 0; l <= b - a; ++l) x += row_strip(primitives_decompose(b - l, a), l);
    return x;
}

BiSchurClass kring_rhs(int b, int a)
{
    BiSchurClass x = fs_decompose(b, a);
    if (b > a) x.add(Partition::column(a), Partition::hook(b - a, a), 1);
    return x;
}

BiSchurClass subquotient_rhs(int l, int b, int a)
{
    BiSchurClass x;
    if (l < 1 || b - a < l) return x;
    for (int t = 0; t <= b - a - l; ++t) {
        const SchurClass strip = convolution_class(SchurClass::of(Partition::row(l)), SchurClass::of(Partition::column(t)));
        x += ((t % 2 == 0) ? 1 : -1) * biconvolution_right(fs_decompose(b - l - t, a), strip);
    }
    if (b - l > a) {
        const SchurClass corr = convolution_class(SchurClass::of(Partition::column(b - l)), SchurClass::of(Partition::row(l)));
        x -= ((b - l - a) % 2 == 0 ? 1 : -1) * BiSchurClass::external(SchurClass::of(Partition::column(a)), corr);
    }
    if (b == a + l) x.add(Partition::column(a), Partition::hook(l, a), -1);
    return x;
}

// --- Checks ----------------------------------------------------------------

CheckReport check_dims(int bound)
{
    return timed([&] {
        auto r = make("dims", {{"bound", bound}});
        Sweep s(r);
        for (int b = 0; b <= bound; ++b)
            for (int a = 0; a <= b; ++a) {
                s.cell();
                const auto fs = enumerate_hom(HomClass::surjection, b, a).size();
                const auto fi = enumerate_hom(HomClass::injection, a, b).size();
                const auto fs_closed = factorial(a) * stirling2(b, a);
                const auto fi_closed = factorial(b) / factorial(b - a);
                if (fs != fs_closed || fi != fi_closed)
                    s.fail({{"b", b}, {"a", a}}, {{"fs", fs_closed}, {"fi", fi_closed}}, {{"fs", fs}, {"fi", fi}});
            }
        s.finish();
        return r;
    });
}

CheckReport check_orthogonality(int max_degree)
{
    return timed([&] {
        auto r = make("orthogonality", {{"max_degree", max_degree}});
        Sweep s(r);
        for (int n = 0; n <= max_degree; ++n) {
            const auto& t = character_table(n);
            const std::size_t k = t.partitions.size();
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    s.cell();
                    mpz_class rows = 0;
                    mpz_class cols = 0;
                    for (std::size_t c = 0; c < k; ++c) {
                        rows += mpz_class(static_cast<unsigned long>(t.class_sizes[c])) * static_cast<long>(t.values[i][c]) *
                                static_cast<long>(t.values[j][c]);
                        cols += mpz_class(static_cast<long>(t.values[c][i])) * static_cast<long>(t.values[c][j]);
                    }
                    const mpz_class row_expect = i == j ? mpz_class(static_cast<unsigned long>(factorial(n))) : mpz_class(0);
                    const mpz_class col_expect =
                        i == j ? mpz_class(static_cast<unsigned long>(centralizer_order(t.partitions[i]))) : mpz_class(0);
                    if (rows != row_expect || cols != col_expect)
                        s.fail({{"n", n}, {"i", t.partitions[i].parts()}, {"j", t.partitions[j].parts()}},
                               {{"rows", row_expect.get_str()}, {"columns", col_expect.get_str()}},
                               {{"rows", rows.get_str()}, {"columns", cols.get_str()}});
                }
        }
        s.finish();
        return r;
    });
}

CheckReport check_pieri_oracle(int max_weight, int max_strip)
{
    return timed([&] {
        auto r = make("pieri_oracle", {{"max_weight", max_weight}, {"max_strip", max_strip}});
        Sweep s(r);
        for (int w = 0; w <= max_weight; ++w)
            for (const auto& lambda : partitions_of(w))
                for (int n = 0; n <= max_strip; ++n) {
                    s.cell();
                    const auto h = pieri_h(lambda, n);
                    const auto h_oracle = induction_product(lambda, Partition::row(n));
                    if (h != h_oracle)
                        s.fail({{"lambda", lambda.parts()}, {"h", n}}, to_json(h_oracle), to_json(h));
                    const auto e = pieri_e(lambda, n);
                    const auto e_oracle = induction_product(lambda, Partition::column(n));
                    if (e != e_oracle)
                        s.fail({{"lambda", lambda.parts()}, {"e", n}}, to_json(e_oracle), to_json(e));
                }
        s.finish();
        return r;
    });
}

CheckReport check_derham(int max_n)
{
    return timed([&] {
        auto r = make("derham", {{"max_n", max_n}});
        Sweep s(r);
        for (int n = 1; n <= max_n; ++n) {
            s.cell();
            if (!derham_check(n)) s.fail({{"n", n}}, "0", "nonzero");
        }
        s.finish();
        return r;
    });
}

CheckReport check_invert(int max_weight)
{
    return timed([&] {
        // The identity is an equality of infinite sums; components through
        // weight max_weight + 5 are compared.
        const int top = max_weight + 5;
        auto r = make("invert", {{"max_weight", max_weight}, {"components_through", top}});
        Sweep s(r);
        for (int w = 0; w <= max_weight; ++w)
            for (const auto& lambda : partitions_of(w))
                for (int n = 0; n <= top; ++n) {
                    s.cell();
                    const SchurClass expected = n == w ? SchurClass::of(lambda) : SchurClass();
                    const SchurClass got = invert_component(SchurClass::of(lambda), n);
                    if (got != expected) s.fail({{"lambda", lambda.parts()}, {"weight", n}}, to_json(expected), to_json(got));
                }
        s.finish();
        return r;
    });
}

CheckReport check_theta_iso(int bound)
{
    return timed([&] {
        auto r = make("theta_iso", {{"bound", bound}});
        Sweep s(r);
        for (int a = 0; a <= bound; ++a) {
            s.cell();
            const HomBasis fb(HomClass::surjection, a, a);
            const HomBasis fi(HomClass::injection, a, a);
            const auto cols = theta_columns(a, a);
            bool ok = cols.size() == fb.size() && fi.size() == fb.size();
            for (std::size_t j = 0; ok && j < fb.size(); ++j) {
                std::vector<int> inverse(static_cast<std::size_t>(a));
                for (int x = 0; x < a; ++x) inverse[static_cast<std::size_t>(fb[j](x))] = x;
                ok = cols[j] == std::vector<std::size_t>{fi.index_of(inverse)};
            }
            if (!ok) s.fail({{"a", a}}, "[alpha] -> [alpha^-1]", "different matrix");
        }
        s.finish();
        return r;
    });
}

CheckReport check_theta(int bound)
{
    return timed([&] {
        auto r = make("theta", {{"bound", bound}});
        Sweep s(r);
        json deficient = json::array();
        for (int a = 0; a <= bound; ++a)
            for (int b = a; b <= bound; ++b) {
                s.cell();
                if (!theta_equivariance_check(a, b)) {
                    s.fail({{"a", a}, {"b", b}}, "equivariant", "not equivariant");
                    continue;
                }
                // The kernel of Theta_a(b) is kFS^(b-a-1)(b, a).
                const auto ker = theta_kernel(a, b);
                const auto level = filtration_level(b, a, b - a - 1);
                bool same = ker.kernel->dimension() == level.dimension();
                for (std::size_t j = 0; same && j < ker.kernel->dimension(); ++j)
                    same = level_contains(b, a, b - a - 1, ker.kernel->sparse_column(j));
                if (!same)
                    s.fail({{"a", a}, {"b", b}}, {{"kernel_dim", level.dimension()}},
                           {{"kernel_dim", ker.kernel->dimension()}});
                if (ker.kernel->dimension() > 0)
                    deficient.push_back({{"a", a}, {"b", b}, {"rank", ker.rank},
                                         {"domain", fs_module(b, a)->dimension()}});
            }
        s.finish();
        r.params["rank_deficient"] = deficient;
        if (!deficient.empty())
            r.note = "Theta is not injective on the listed cells; its kernel is kFS^(b-a-1)(b,a), checked exactly";
        return r;
    });
}

CheckReport check_coker_theta(int bound)
{
    return timed([&] {
        auto r = make("coker_theta", {{"bound", bound}});
        Sweep s(r);
        for (int a = 0; a <= bound; ++a)
            for (int b = a; b <= bound; ++b) {
                const BiSchurClass expected =
                    b > a ? BiSchurClass::of(Partition::column(a), Partition::hook(b - a, a)) : BiSchurClass();
                s.compare({{"a", a}, {"b", b}}, expected, coker_theta_decompose(a, b));
            }
        s.finish();
        return r;
    });
}

CheckReport check_lambda_bar(int bound)
{
    return timed([&] {
        auto r = make("lambda_bar", {{"bound", bound}});
        Sweep s(r);
        for (int b = 0; b <= bound; ++b)
            for (int t = 0; t <= b; ++t) {
                s.cell();
                const RepSpace v = lambda_bar_rep(t, b);
                const SchurClass expected = b > t ? SchurClass::of(Partition::hook(b - t, t)) : SchurClass();
                const SchurClass got = decompose(v);
                const std::size_t dim_expected = b > t ? binomial(b - 1, t) : 0;
                if (got != expected || v.dimension() != dim_expected)
                    s.fail({{"t", t}, {"b", b}}, {{"class", to_json(expected)}, {"dim", dim_expected}},
                           {{"class", to_json(got)}, {"dim", v.dimension()}});
            }
        s.finish();
        return r;
    });
}

CheckReport check_filtration(int bound)
{
    return timed([&] {
        auto r = make("filtration", {{"bound", bound}});
        Sweep s(r);
        for (int b = 0; b <= bound; ++b)
            for (int a = 0; a <= b; ++a) {
                const auto module = fs_module(b, a);
                const std::size_t full = module->dimension();
                for (int t = -1; t <= b; ++t) {
                    s.cell();
                    const json cell = {{"b", b}, {"a", a}, {"t", t}};
                    const auto level = filtration_level(b, a, t);
                    if (t == -1 && level.dimension() != 0) s.fail(cell, "zero space", level.dimension());
                    if (t >= b && level.dimension() != full) s.fail(cell, full, level.dimension());
                    for (std::size_t j = 0; j < level.dimension(); ++j) {
                        const SparseVector& v = level.space->sparse_column(j);
                        if (!level_contains(b, a, t, v)) s.fail(cell, "basis in kernel", "basis vector outside kernel");
                        if (!level_contains(b, a, t + 1, v)) s.fail(cell, "nested in level t+1", "not nested");
                        for (const auto& g : module->bimodule().left_generators())
                            if (!level_contains(b, a, t, act(g, v))) s.fail(cell, "left stable", "not left stable");
                        for (const auto& g : module->bimodule().right_generators())
                            if (!level_contains(b, a, t, act(g, v))) s.fail(cell, "right stable", "not right stable");
                        for (int c = a; c < b; ++c) {
                            const auto res = restriction(b, a, c);
                            for (std::size_t k = 0; k < res->subsets().size(); ++k)
                                if (!level_contains(c, a, t, res->apply_block(k, v)))
                                    s.fail({{"b", b}, {"a", a}, {"t", t}, {"c", c}}, "restriction stays in level t",
                                           "restriction leaves level t");
                        }
                    }
                }
            }
        s.finish();
        return r;
    });
}

CheckReport check_closure(int bound)
{
    return timed([&] {
        auto r = make("closure", {{"bound", bound}});
        Sweep s(r);
        for (int a = 0; a <= bound; ++a) {
            s.cell();
            const auto p = primitives(a, a);
            if (p.dimension() != factorial(a)) s.fail({{"a", a}, {"contains_kFB", true}}, factorial(a), p.dimension());
        }
        for (int b = 0; b <= bound; ++b)
            for (int x = 0; x <= b; ++x)
                for (int y = 0; y <= x; ++y) {
                    s.cell();
                    if (!closure_check(b, x, y)) s.fail({{"b", b}, {"x", x}, {"y", y}}, "closed", "not closed");
                }
        s.finish();
        return r;
    });
}

CheckReport check_sgn_vanishing(int bound)
{
    return timed([&] {
        auto r = make("sgn_vanishing", {{"bound", bound}});
        Sweep s(r);
        for (int a = 1; a <= bound; ++a)
            for (int c = 0; c < a; ++c) {
                s.cell();
                if (!sgn_vanishing_check(a, c)) s.fail({{"a", a}, {"c", c}}, 0, "nonzero");
            }
        s.finish();
        return r;
    });
}

CheckReport check_ses(int bound)
{
    return timed([&] {
        auto r = make("ses", {{"bound", bound}});
        Sweep s(r);
        for (int l = 1; l <= bound; ++l) {
            const SesReport rep = ses_check(l, bound);
            for (const auto& c : rep.cells) {
                const json cell = {{"l", l}, {"b", c.b}, {"a", c.a}};
                s.compare(cell, c.rhs, c.lhs);
                if (!c.augmentation_trivial) s.fail(cell, "augmentation acts trivially", "augmentation acts nontrivially");
            }
        }
        s.finish();
        return r;
    });
}

CheckReport primfs_formula(int bound)
{
    return timed([&] {
        auto r = make("primfs", {{"bound", bound}});
        Sweep s(r);
        for (int b = 0; b <= bound; ++b)
            for (int a = 0; a <= b; ++a) s.compare({{"b", b}, {"a", a}}, primfs_rhs(b, a), primfs_lhs(b, a));
        s.finish();
        return r;
    });
}

CheckReport kring_fs_check(int bound)
{
    return timed([&] {
        auto r = make("kring", {{"bound", bound}});
        Sweep s(r);
        for (int b = 0; b <= bound; ++b)
            for (int a = 0; a <= b; ++a) s.compare({{"b", b}, {"a", a}}, kring_rhs(b, a), kring_lhs(b, a));
        s.finish();
        return r;
    });
}

CheckReport subquotient_formula(int bound)
{
    return timed([&] {
        auto r = make("subquotient", {{"bound", bound}});
        Sweep s(r);
        for (int b = 0; b <= bound; ++b)
            for (int a = 0; a <= b; ++a)
                for (int l = 1; l <= b - a; ++l)
                    s.compare({{"l", l}, {"b", b}, {"a", a}}, subquotient_rhs(l, b, a), subquotient_decompose(l, b, a));
        s.finish();
        return r;
    });
}

// --- Driver ----------------------------------------------------------------

const std::vector<std::string>& check_ids()
{
    static const std::vector<std::string> ids{"dims",        "orthogonality", "pieri_oracle", "derham",
                                              "invert",      "theta_iso",     "theta",        "coker_theta",
                                              "lambda_bar",  "filtration",    "closure",      "sgn_vanishing",
                                              "ses",         "primfs",        "kring",        "subquotient"};
    return ids;
}

CheckReport run_check(const std::string& id, int bound)
{
    static const std::map<std::string, std::function<CheckReport(int)>> table{
        {"dims", check_dims},
        {"orthogonality", [](int) { return check_orthogonality(7); }},
        {"pieri_oracle", [](int) { return check_pieri_oracle(5, 3); }},
        {"derham", [](int) { return check_derham(10); }},
        {"invert", [](int) { return check_invert(5); }},
        {"theta_iso", check_theta_iso},
        {"theta", check_theta},
        {"coker_theta", check_coker_theta},
        {"lambda_bar", check_lambda_bar},
        {"filtration", check_filtration},
        {"closure", check_closure},
        {"sgn_vanishing", check_sgn_vanishing},
        {"ses", check_ses},
        {"primfs", primfs_formula},
        {"kring", kring_fs_check},
        {"subquotient", subquotient_formula},
    };
    auto it = table.find(id);
    if (it == table.end()) throw std::invalid_argument("unknown check id: " + id);
    return it->second(bound);
}

std::vector<CheckReport> run_all(int bound)
{
    std::vector<CheckReport> out;
    for (const auto& id : check_ids()) out.push_back(run_check(id, bound));
    return out;
}

bool any_failed(const std::vector<CheckReport>& reports)
{
    return std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.status == Status::fail; });
}

std::string dims_csv(int bound)
{
    std::ostringstream os;
    os << "b,a,dim_fs,dim_fs0";
    for (int t = 0; t <= bound; ++t) os << ",l" << t;
    os << "\n";
    for (int b = 0; b <= bound; ++b)
        for (int a = 0; a <= b; ++a) {
            os << b << "," << a << "," << fs_module(b, a)->dimension() << "," << primitives(b, a).dimension();
            for (int t = 0; t <= bound; ++t) os << "," << filtration_level(b, a, t).dimension();
            os << "\n";
        }
    return os.str();
}

} // namespace fsprim
