#include "fsprim/repdecomp.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace fsprim {

namespace {

// Beta-number form of Murnaghan-Nakayama: removing a rim hook of length k
// moves one bead from position x to x - k; the sign is (-1)^(beads jumped).
using MnKey = std::pair<std::vector<int>, std::vector<int>>;

std::int64_t mn_recursive(const std::vector<int>& lambda, const std::vector<int>& mu, std::map<MnKey, std::int64_t>& memo)
{
    if (mu.empty()) return lambda.empty() ? 1 : 0;
    MnKey key{lambda, mu};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int k = mu.front();
    const std::vector<int> rest(mu.begin() + 1, mu.end());
    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(lambda.size());
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + len - 1 - i;

    std::int64_t total = 0;
    for (int i = 0; i < len; ++i) {
        const int from = beta[static_cast<std::size_t>(i)];
        const int to = from - k;
        if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
        int jumped = 0;
        for (int x : beta)
            if (x > to && x < from) ++jumped;
        std::vector<int> moved = beta;
        moved[static_cast<std::size_t>(i)] = to;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> smaller;
        for (int r = 0; r < len; ++r) {
            int part = moved[static_cast<std::size_t>(r)] - (len - 1 - r);
            if (part > 0) smaller.push_back(part);
        }
        std::int64_t term = mn_recursive(smaller, rest, memo);
        total += (jumped % 2 == 0) ? term : -term;
    }
    memo.emplace(std::move(key), total);
    return total;
}

template <class Map, class Key>
void add_term(Map& terms, const Key& key, std::int64_t c)
{
    if (c == 0) return;
    auto [it, inserted] = terms.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

nlohmann::json parts_json(const Partition& p) { return nlohmann::json(p.parts()); }

Partition parts_from_json(const nlohmann::json& j) { return Partition(j.get<std::vector<int>>()); }

std::int64_t to_multiplicity(const Rational& m, bool require_genuine, const std::string& what)
{
    if (!m.is_integer()) throw ConsistencyError(what + ": non-integral multiplicity " + m.to_string());
    if (require_genuine && m.sign() < 0) throw ConsistencyError(what + ": negative multiplicity " + m.to_string());
    return m.to_int64();
}

void check_relations(const std::vector<SignedPermutation>& gens, int degree, std::size_t ambient, const char* side)
{
    const std::size_t expected = degree > 0 ? static_cast<std::size_t>(degree - 1) : 0;
    if (gens.size() != expected)
        throw std::invalid_argument(std::string(side) + ": expected " + std::to_string(expected) + " generators");
    for (const auto& g : gens)
        if (g.size() != ambient) throw std::invalid_argument(std::string(side) + ": generator size mismatch");
    if (degree > 8) return;
    const auto id = SignedPermutation::identity(ambient);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].then(gens[i]) != id) throw std::invalid_argument(std::string(side) + ": s_i^2 != 1");
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            auto ij = gens[i].then(gens[j]);
            if (j == i + 1) {
                if (ij.then(ij).then(ij) != id) throw std::invalid_argument(std::string(side) + ": braid relation fails");
            } else if (ij != gens[j].then(gens[i])) {
                throw std::invalid_argument(std::string(side) + ": distant generators do not commute");
            }
        }
    }
}

SignedPermutation cycle_representative(const std::vector<SignedPermutation>& gens, std::size_t ambient,
                                       const CycleType& mu)
{
    // Cycles on consecutive blocks [s, s+k): s_s s_{s+1} ... s_{s+k-2}.
    SignedPermutation g = SignedPermutation::identity(ambient);
    std::size_t start = 0;
    for (int k : mu.parts()) {
        for (std::size_t i = start; i + 1 < start + static_cast<std::size_t>(k); ++i) g = g.then(gens[i]);
        start += static_cast<std::size_t>(k);
    }
    return g;
}

} // namespace

std::int64_t mn_character(const Partition& lambda, const CycleType& mu)
{
    if (lambda.weight() != mu.weight()) throw std::invalid_argument("mn_character: weights differ");
    const auto& table = character_table(lambda.weight());
    return table.values[partition_index(lambda)][partition_index(mu)];
}

const CharacterTable& character_table(int n)
{
    if (n < 0) throw std::invalid_argument("character_table: negative degree");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CharacterTable>> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;

    auto table = std::make_unique<CharacterTable>();
    table->degree = n;
    table->partitions = partitions_of(n);
    std::map<MnKey, std::int64_t> memo;
    for (const auto& mu : table->partitions) table->class_sizes.push_back(class_size(mu));
    for (const auto& lambda : table->partitions) {
        std::vector<std::int64_t> row;
        for (const auto& mu : table->partitions) row.push_back(mn_recursive(lambda.parts(), mu.parts(), memo));
        table->values.push_back(std::move(row));
    }
    return *cache.emplace(n, std::move(table)).first->second;
}

ClassFunction operator-(const ClassFunction& lhs, const ClassFunction& rhs)
{
    if (lhs.degree != rhs.degree) throw std::invalid_argument("ClassFunction: degrees differ");
    ClassFunction out = lhs;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] -= rhs.values[i];
    return out;
}

BiClassFunction operator-(const BiClassFunction& lhs, const BiClassFunction& rhs)
{
    if (lhs.left_degree != rhs.left_degree || lhs.right_degree != rhs.right_degree)
        throw std::invalid_argument("BiClassFunction: degrees differ");
    BiClassFunction out = lhs;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        for (std::size_t j = 0; j < out.values[i].size(); ++j) out.values[i][j] -= rhs.values[i][j];
    return out;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g)
{
    if (f.degree != g.degree) throw std::invalid_argument("inner_product: degrees differ");
    const auto& table = character_table(f.degree);
    Rational sum;
    for (std::size_t c = 0; c < table.partitions.size(); ++c)
        sum += Rational(static_cast<std::int64_t>(table.class_sizes[c])) * f.values[c] * g.values[c];
    return sum / Rational(static_cast<std::int64_t>(factorial(f.degree)));
}

ClassFunction irreducible_character(const Partition& lambda)
{
    const auto& table = character_table(lambda.weight());
    ClassFunction out{lambda.weight(), {}};
    for (std::int64_t v : table.values[partition_index(lambda)]) out.values.emplace_back(v);
    return out;
}

// --- SchurClass ------------------------------------------------------------

SchurClass::SchurClass(std::initializer_list<std::pair<const Partition, std::int64_t>> terms)
{
    for (const auto& [p, c] : terms) add(p, c);
}

SchurClass SchurClass::of(const Partition& lambda, std::int64_t coefficient)
{
    SchurClass x;
    x.add(lambda, coefficient);
    return x;
}

std::int64_t SchurClass::coefficient(const Partition& lambda) const
{
    auto it = terms_.find(lambda);
    return it == terms_.end() ? 0 : it->second;
}

void SchurClass::add(const Partition& lambda, std::int64_t coefficient) { add_term(terms_, lambda, coefficient); }

std::int64_t SchurClass::dimension() const
{
    std::int64_t d = 0;
    for (const auto& [p, c] : terms_) d += c * static_cast<std::int64_t>(irrep_dimension(p));
    return d;
}

SchurClass& SchurClass::operator+=(const SchurClass& rhs)
{
    for (const auto& [p, c] : rhs.terms_) add(p, c);
    return *this;
}

SchurClass& SchurClass::operator-=(const SchurClass& rhs)
{
    for (const auto& [p, c] : rhs.terms_) add(p, -c);
    return *this;
}

SchurClass operator*(std::int64_t k, const SchurClass& x)
{
    SchurClass out;
    for (const auto& [p, c] : x.terms_) out.add(p, k * c);
    return out;
}

std::string SchurClass::to_string() const
{
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [p, c] : terms_) {
        os << (first ? "" : ", ") << p.to_string() << ":" << c;
        first = false;
    }
    os << "}";
    return os.str();
}

// --- BiSchurClass ----------------------------------------------------------

BiSchurClass::BiSchurClass(std::initializer_list<std::pair<const Key, std::int64_t>> terms)
{
    for (const auto& [k, c] : terms) add(k.first, k.second, c);
}

BiSchurClass BiSchurClass::of(const Partition& left, const Partition& right, std::int64_t coefficient)
{
    BiSchurClass x;
    x.add(left, right, coefficient);
    return x;
}

BiSchurClass BiSchurClass::external(const SchurClass& left, const SchurClass& right)
{
    BiSchurClass x;
    for (const auto& [l, c] : left.terms())
        for (const auto& [r, d] : right.terms()) x.add(l, r, c * d);
    return x;
}

std::int64_t BiSchurClass::coefficient(const Partition& left, const Partition& right) const
{
    auto it = terms_.find(Key{left, right});
    return it == terms_.end() ? 0 : it->second;
}

void BiSchurClass::add(const Partition& left, const Partition& right, std::int64_t coefficient)
{
    add_term(terms_, Key{left, right}, coefficient);
}

std::int64_t BiSchurClass::dimension() const
{
    std::int64_t d = 0;
    for (const auto& [k, c] : terms_)
        d += c * static_cast<std::int64_t>(irrep_dimension(k.first) * irrep_dimension(k.second));
    return d;
}

BiSchurClass BiSchurClass::restricted_to(int a, int b) const
{
    BiSchurClass out;
    for (const auto& [k, c] : terms_)
        if (k.first.weight() == a && k.second.weight() == b) out.terms_.emplace(k, c);
    return out;
}

BiSchurClass& BiSchurClass::operator+=(const BiSchurClass& rhs)
{
    for (const auto& [k, c] : rhs.terms_) add(k.first, k.second, c);
    return *this;
}

BiSchurClass& BiSchurClass::operator-=(const BiSchurClass& rhs)
{
    for (const auto& [k, c] : rhs.terms_) add(k.first, k.second, -c);
    return *this;
}

BiSchurClass operator*(std::int64_t k, const BiSchurClass& x)
{
    BiSchurClass out;
    for (const auto& [key, c] : x.terms_) out.add(key.first, key.second, k * c);
    return out;
}

std::string BiSchurClass::to_string() const
{
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [k, c] : terms_) {
        os << (first ? "" : ", ") << "(" << k.first.to_string() << "," << k.second.to_string() << "):" << c;
        first = false;
    }
    os << "}";
    return os.str();
}

nlohmann::json to_json(const SchurClass& x)
{
    auto out = nlohmann::json::array();
    for (const auto& [p, c] : x.terms()) out.push_back({{"partition", parts_json(p)}, {"coefficient", c}});
    return out;
}

nlohmann::json to_json(const BiSchurClass& x)
{
    auto out = nlohmann::json::array();
    for (const auto& [k, c] : x.terms())
        out.push_back({{"partitions", {parts_json(k.first), parts_json(k.second)}}, {"coefficient", c}});
    return out;
}

SchurClass schur_class_from_json(const nlohmann::json& j)
{
    SchurClass x;
    for (const auto& term : j) x.add(parts_from_json(term.at("partition")), term.at("coefficient").get<std::int64_t>());
    return x;
}

BiSchurClass bischur_class_from_json(const nlohmann::json& j)
{
    BiSchurClass x;
    for (const auto& term : j) {
        const auto& ps = term.at("partitions");
        x.add(parts_from_json(ps.at(0)), parts_from_json(ps.at(1)), term.at("coefficient").get<std::int64_t>());
    }
    return x;
}

// --- SignedPermutation -----------------------------------------------------

SignedPermutation::SignedPermutation(std::vector<std::uint32_t> image, std::vector<std::int8_t> signs)
    : image_(std::move(image)), signs_(std::move(signs))
{
    if (!signs_.empty() && signs_.size() != image_.size())
        throw std::invalid_argument("SignedPermutation: sign vector has the wrong length");
    std::vector<bool> hit(image_.size(), false);
    for (auto v : image_) {
        if (v >= image_.size() || hit[v]) throw std::invalid_argument("SignedPermutation: not a permutation");
        hit[v] = true;
    }
    for (auto s : signs_)
        if (s != 1 && s != -1) throw std::invalid_argument("SignedPermutation: signs must be +1 or -1");
    if (std::all_of(signs_.begin(), signs_.end(), [](std::int8_t s) { return s == 1; })) signs_.clear();
}

SignedPermutation SignedPermutation::identity(std::size_t n)
{
    std::vector<std::uint32_t> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = static_cast<std::uint32_t>(i);
    return SignedPermutation(std::move(image));
}

SignedPermutation SignedPermutation::then(const SignedPermutation& next) const
{
    if (next.size() != size()) throw std::invalid_argument("SignedPermutation::then: size mismatch");
    std::vector<std::uint32_t> image(size());
    std::vector<std::int8_t> signs;
    const bool signed_result = !is_unsigned() || !next.is_unsigned();
    if (signed_result) signs.resize(size());
    for (std::size_t i = 0; i < size(); ++i) {
        image[i] = next.image_[image_[i]];
        if (signed_result) signs[i] = static_cast<std::int8_t>(sign(i) * next.sign(image_[i]));
    }
    return SignedPermutation(std::move(image), std::move(signs));
}

SignedPermutation SignedPermutation::inverse() const
{
    std::vector<std::uint32_t> image(size());
    std::vector<std::int8_t> signs(is_unsigned() ? 0 : size());
    for (std::size_t i = 0; i < size(); ++i) {
        image[image_[i]] = static_cast<std::uint32_t>(i);
        if (!is_unsigned()) signs[image_[i]] = signs_[i];
    }
    return SignedPermutation(std::move(image), std::move(signs));
}

RatMatrix SignedPermutation::matrix() const
{
    RatMatrix m(size(), size());
    for (std::size_t i = 0; i < size(); ++i) m(image_[i], i) = Rational(sign(i));
    return m;
}

bool operator==(const SignedPermutation& lhs, const SignedPermutation& rhs)
{
    if (lhs.image_ != rhs.image_) return false;
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (lhs.sign(i) != rhs.sign(i)) return false;
    return true;
}

Rational subspace_trace(const SignedPermutation& g, const Subspace* sub)
{
    if (sub == nullptr) {
        std::int64_t t = 0;
        for (std::size_t r = 0; r < g.size(); ++r)
            if (g.image(r) == r) t += g.sign(r);
        return Rational(t);
    }
    if (sub->ambient_dimension() != g.size()) throw std::invalid_argument("subspace_trace: size mismatch");
    // With K in pivot form the coordinates of g k_j are (gK)[pivots, j], and
    // (gK)[p, j] = sign(r) K[r, j] for r = g^{-1}(p).
    std::vector<std::uint32_t> preimage(g.size());
    for (std::size_t r = 0; r < g.size(); ++r) preimage[g.image(r)] = static_cast<std::uint32_t>(r);
    Rational t;
    const auto& pivots = sub->pivots();
    for (std::size_t j = 0; j < pivots.size(); ++j) {
        const std::size_t r = preimage[pivots[j]];
        const Rational entry = sub->entry(r, j);
        if (entry.is_zero()) continue;
        if (g.sign(r) > 0) t += entry;
        else t -= entry;
    }
    return t;
}

// --- RepSpace --------------------------------------------------------------

RepSpace::RepSpace(int degree, std::size_t ambient_dimension, std::vector<SignedPermutation> generators,
                   std::shared_ptr<const Subspace> subspace)
    : degree_(degree), ambient_(ambient_dimension), generators_(std::move(generators)), subspace_(std::move(subspace))
{
    if (degree_ < 0) throw std::invalid_argument("RepSpace: negative degree");
    check_relations(generators_, degree_, ambient_, "RepSpace");
    if (subspace_ && subspace_->ambient_dimension() != ambient_)
        throw std::invalid_argument("RepSpace: subspace lives in a different ambient space");
}

RepSpace RepSpace::trivial(int n)
{
    return RepSpace(n, 1, std::vector<SignedPermutation>(n > 0 ? static_cast<std::size_t>(n - 1) : 0,
                                                         SignedPermutation::identity(1)));
}

RepSpace RepSpace::regular(int n)
{
    // Basis: permutations in lexicographic order, acted on by left multiplication.
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, std::uint32_t> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<std::uint32_t>(i);
    std::vector<SignedPermutation> gens;
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<std::uint32_t> image(perms.size());
        for (std::size_t r = 0; r < perms.size(); ++r) {
            auto q = perms[r];
            for (int& v : q)
                if (v == i) v = i + 1;
                else if (v == i + 1) v = i;
            image[r] = index.at(q);
        }
        gens.emplace_back(std::move(image));
    }
    return RepSpace(n, perms.size(), std::move(gens));
}

RepSpace RepSpace::natural(int n)
{
    std::vector<SignedPermutation> gens;
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<std::uint32_t> image(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) image[static_cast<std::size_t>(r)] = static_cast<std::uint32_t>(r);
        std::swap(image[static_cast<std::size_t>(i)], image[static_cast<std::size_t>(i + 1)]);
        gens.emplace_back(std::move(image));
    }
    return RepSpace(n, static_cast<std::size_t>(n), std::move(gens));
}

RepSpace RepSpace::zero(int n)
{
    return RepSpace(n, 0, std::vector<SignedPermutation>(n > 0 ? static_cast<std::size_t>(n - 1) : 0));
}

SignedPermutation RepSpace::class_representative(const CycleType& mu) const
{
    if (mu.weight() != degree_) throw std::invalid_argument("class_representative: wrong weight");
    return cycle_representative(generators_, ambient_, mu);
}

RatMatrix RepSpace::generator_matrix(std::size_t i) const
{
    const auto& g = generators_.at(i);
    if (!subspace_) return g.matrix();
    const auto& sub = *subspace_;
    std::vector<std::uint32_t> preimage(g.size());
    for (std::size_t r = 0; r < g.size(); ++r) preimage[g.image(r)] = static_cast<std::uint32_t>(r);
    const std::size_t d = sub.dimension();
    RatMatrix m(d, d);
    for (std::size_t row = 0; row < d; ++row) {
        const std::size_t r = preimage[sub.pivots()[row]];
        for (const auto& [j, entry] : sub.sparse_row(r)) m(row, j) = g.sign(r) > 0 ? entry : -entry;
    }
    return m;
}

bool RepSpace::is_stable() const
{
    if (!subspace_) return true;
    for (const auto& g : generators_)
        for (std::size_t j = 0; j < subspace_->dimension(); ++j) {
            SparseVector moved;
            for (const auto& [r, v] : subspace_->sparse_column(j))
                moved.emplace_back(g.image(r), g.sign(r) > 0 ? v : -v);
            std::sort(moved.begin(), moved.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            if (!subspace_->contains(moved)) return false;
        }
    return true;
}

// --- BiRepSpace ------------------------------------------------------------

BiRepSpace::BiRepSpace(int left_degree, int right_degree, std::size_t ambient_dimension,
                       std::vector<SignedPermutation> left_generators, std::vector<SignedPermutation> right_generators,
                       std::shared_ptr<const Subspace> subspace)
    : left_degree_(left_degree), right_degree_(right_degree), ambient_(ambient_dimension),
      left_(std::move(left_generators)), right_(std::move(right_generators)), subspace_(std::move(subspace))
{
    if (left_degree_ < 0 || right_degree_ < 0) throw std::invalid_argument("BiRepSpace: negative degree");
    check_relations(left_, left_degree_, ambient_, "BiRepSpace left");
    check_relations(right_, right_degree_, ambient_, "BiRepSpace right");
    if (left_degree_ <= 8 && right_degree_ <= 8)
        for (const auto& l : left_)
            for (const auto& r : right_)
                if (l.then(r) != r.then(l)) throw std::invalid_argument("BiRepSpace: left and right actions do not commute");
    if (subspace_ && subspace_->ambient_dimension() != ambient_)
        throw std::invalid_argument("BiRepSpace: subspace lives in a different ambient space");
}

BiRepSpace BiRepSpace::restricted(std::shared_ptr<const Subspace> subspace) const
{
    BiRepSpace out = *this;
    if (subspace && subspace->ambient_dimension() != ambient_)
        throw std::invalid_argument("BiRepSpace::restricted: subspace lives in a different ambient space");
    out.subspace_ = std::move(subspace);
    return out;
}

RepSpace BiRepSpace::left_module() const { return RepSpace(left_degree_, ambient_, left_, subspace_); }

RepSpace BiRepSpace::right_module() const { return RepSpace(right_degree_, ambient_, right_, subspace_); }

ClassFunction rep_character(const RepSpace& v)
{
    ClassFunction chi{v.degree(), {}};
    for (const auto& mu : partitions_of(v.degree()))
        chi.values.push_back(subspace_trace(v.class_representative(mu), v.subspace()));
    return chi;
}

BiClassFunction bicharacter(const BiRepSpace& v)
{
    BiClassFunction chi{v.left_degree(), v.right_degree(), {}};
    std::vector<SignedPermutation> rights;
    for (const auto& beta : partitions_of(v.right_degree()))
        rights.push_back(cycle_representative(v.right_generators(), v.ambient_dimension(), beta));
    for (const auto& alpha : partitions_of(v.left_degree())) {
        const auto left = cycle_representative(v.left_generators(), v.ambient_dimension(), alpha);
        std::vector<Rational> row;
        for (const auto& right : rights) row.push_back(subspace_trace(left.then(right), v.subspace()));
        chi.values.push_back(std::move(row));
    }
    return chi;
}

SchurClass decompose_character(const ClassFunction& chi, bool require_genuine)
{
    const auto& table = character_table(chi.degree);
    if (chi.values.size() != table.partitions.size()) throw std::invalid_argument("decompose_character: bad length");
    SchurClass out;
    for (std::size_t l = 0; l < table.partitions.size(); ++l) {
        Rational m = inner_product(chi, irreducible_character(table.partitions[l]));
        out.add(table.partitions[l], to_multiplicity(m, require_genuine, "decompose_character"));
    }
    return out;
}

BiSchurClass decompose_bicharacter(const BiClassFunction& chi, bool require_genuine)
{
    const auto& lt = character_table(chi.left_degree);
    const auto& rt = character_table(chi.right_degree);
    const std::size_t nl = lt.partitions.size();
    const std::size_t nr = rt.partitions.size();
    if (chi.values.size() != nl) throw std::invalid_argument("decompose_bicharacter: bad shape");
    // Contract the right classes first: half[alpha][mu] = sum_beta |C_beta| chi(alpha, beta) chi_mu(beta).
    std::vector<std::vector<Rational>> half(nl, std::vector<Rational>(nr));
    for (std::size_t a = 0; a < nl; ++a) {
        if (chi.values[a].size() != nr) throw std::invalid_argument("decompose_bicharacter: bad shape");
        for (std::size_t m = 0; m < nr; ++m)
            for (std::size_t b = 0; b < nr; ++b) {
                if (chi.values[a][b].is_zero() || rt.values[m][b] == 0) continue;
                half[a][m] += Rational(static_cast<std::int64_t>(rt.class_sizes[b]) * rt.values[m][b]) * chi.values[a][b];
            }
    }
    const Rational order(static_cast<std::int64_t>(factorial(chi.left_degree) * factorial(chi.right_degree)));
    BiSchurClass out;
    for (std::size_t l = 0; l < nl; ++l)
        for (std::size_t m = 0; m < nr; ++m) {
            Rational sum;
            for (std::size_t a = 0; a < nl; ++a) {
                if (half[a][m].is_zero() || lt.values[l][a] == 0) continue;
                sum += Rational(static_cast<std::int64_t>(lt.class_sizes[a]) * lt.values[l][a]) * half[a][m];
            }
            sum /= order;
            out.add(lt.partitions[l], rt.partitions[m], to_multiplicity(sum, require_genuine, "decompose_bicharacter"));
        }
    return out;
}

SchurClass decompose(const RepSpace& v)
{
    SchurClass out = decompose_character(rep_character(v));
    if (out.dimension() != static_cast<std::int64_t>(v.dimension()))
        throw ConsistencyError("decompose: multiplicities do not add up to the dimension");
    return out;
}

BiSchurClass bidecompose(const BiRepSpace& v)
{
    BiSchurClass out = decompose_bicharacter(bicharacter(v));
    if (out.dimension() != static_cast<std::int64_t>(v.dimension()))
        throw ConsistencyError("bidecompose: multiplicities do not add up to the dimension");
    return out;
}

// --- Products --------------------------------------------------------------

namespace {

void horizontal_strips(const std::vector<int>& lambda, std::size_t row, int remaining, std::vector<int>& mu,
                       SchurClass& out)
{
    const std::size_t len = lambda.size();
    const int base = row < len ? lambda[row] : 0;
    if (row == len) {
        // New last row, bounded by the previous row of lambda.
        if (len == 0 || remaining <= lambda[len - 1]) {
            if (remaining > 0) mu.push_back(remaining);
            out.add(Partition(mu), 1);
            if (remaining > 0) mu.pop_back();
        }
        return;
    }
    const int cap = row == 0 ? remaining : std::min(remaining, lambda[row - 1] - base);
    for (int add = 0; add <= cap; ++add) {
        mu.push_back(base + add);
        horizontal_strips(lambda, row + 1, remaining - add, mu, out);
        mu.pop_back();
    }
}

void vertical_strips(const std::vector<int>& lambda, std::size_t row, int remaining, std::vector<int>& mu,
                     SchurClass& out)
{
    if (remaining == 0) {
        std::vector<int> full = mu;
        for (std::size_t r = row; r < lambda.size(); ++r) {
            if (!full.empty() && lambda[r] > full.back()) return;
            full.push_back(lambda[r]);
        }
        out.add(Partition(full), 1);
        return;
    }
    const int base = row < lambda.size() ? lambda[row] : 0;
    for (int add = 1; add >= 0; --add) {
        const int part = base + add;
        if (part == 0) continue;
        if (!mu.empty() && part > mu.back()) continue;
        mu.push_back(part);
        vertical_strips(lambda, row + 1, remaining - add, mu, out);
        mu.pop_back();
    }
}

bool is_row(const Partition& p) { return p.length() <= 1; }
bool is_column(const Partition& p) { return p.part(0) <= 1; }

} // namespace

SchurClass pieri_h(const Partition& lambda, int n)
{
    if (n < 0) throw std::invalid_argument("pieri_h: negative size");
    SchurClass out;
    std::vector<int> mu;
    horizontal_strips(lambda.parts(), 0, n, mu, out);
    return out;
}

SchurClass pieri_e(const Partition& lambda, int t)
{
    if (t < 0) throw std::invalid_argument("pieri_e: negative size");
    SchurClass out;
    std::vector<int> mu;
    vertical_strips(lambda.parts(), 0, t, mu, out);
    return out;
}

ClassFunction induced_character(const Partition& lambda, const Partition& mu)
{
    // Ind(nu) = sum over ways to split the cycles of nu into a part of weight
    // p and a part of weight q of z_nu / (z_alpha z_beta) chi_lambda(alpha) chi_mu(beta);
    // the centralizer ratio is prod_k binom(m_k, j_k).
    const int p = lambda.weight();
    const int q = mu.weight();
    ClassFunction out{p + q, {}};
    for (const auto& nu : partitions_of(p + q)) {
        std::vector<std::pair<int, int>> groups; // (cycle length, multiplicity)
        for (int k : nu.parts())
            if (!groups.empty() && groups.back().first == k) ++groups.back().second;
            else groups.emplace_back(k, 1);
        std::vector<int> take(groups.size(), 0);
        std::int64_t value = 0;
        while (true) {
            int wa = 0;
            for (std::size_t g = 0; g < groups.size(); ++g) wa += take[g] * groups[g].first;
            if (wa == p) {
                std::vector<int> alpha;
                std::vector<int> beta;
                std::int64_t ratio = 1;
                for (std::size_t g = 0; g < groups.size(); ++g) {
                    alpha.insert(alpha.end(), static_cast<std::size_t>(take[g]), groups[g].first);
                    beta.insert(beta.end(), static_cast<std::size_t>(groups[g].second - take[g]), groups[g].first);
                    ratio *= static_cast<std::int64_t>(binomial(groups[g].second, take[g]));
                }
                value += ratio * mn_character(lambda, Partition(alpha)) * mn_character(mu, Partition(beta));
            }
            std::size_t g = 0;
            while (g < groups.size() && take[g] == groups[g].second) take[g++] = 0;
            if (g == groups.size()) break;
            ++take[g];
        }
        out.values.emplace_back(value);
    }
    return out;
}

SchurClass induction_product(const Partition& lambda, const Partition& mu)
{
    static std::mutex mutex;
    static std::map<std::pair<Partition, Partition>, SchurClass> cache;
    const std::pair<Partition, Partition> key{lambda, mu};
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    SchurClass result = decompose_character(induced_character(lambda, mu));
    std::lock_guard lock(mutex);
    return cache.emplace(key, std::move(result)).first->second;
}

SchurClass convolution_class(const SchurClass& x, const SchurClass& y)
{
    SchurClass out;
    for (const auto& [l, c] : x.terms())
        for (const auto& [m, d] : y.terms()) {
            SchurClass term;
            if (is_row(m)) term = pieri_h(l, m.weight());
            else if (is_column(m)) term = pieri_e(l, m.weight());
            else if (is_row(l)) term = pieri_h(m, l.weight());
            else if (is_column(l)) term = pieri_e(m, l.weight());
            else term = induction_product(l, m);
            out += (c * d) * term;
        }
    return out;
}

BiSchurClass biconvolution_right(const BiSchurClass& x, const SchurClass& y)
{
    BiSchurClass out;
    for (const auto& [k, c] : x.terms()) {
        const SchurClass right = convolution_class(SchurClass::of(k.second), y);
        for (const auto& [nu, d] : right.terms()) out.add(k.first, nu, c * d);
    }
    return out;
}

bool derham_check(int n)
{
    SchurClass total;
    for (int t = 0; t <= n; ++t) {
        SchurClass term = convolution_class(SchurClass::of(Partition::row(n - t)), SchurClass::of(Partition::column(t)));
        total += (t % 2 == 0 ? 1 : -1) * term;
    }
    return total.is_zero();
}

SchurClass invert_component(const SchurClass& x, int n)
{
    SchurClass out;
    for (int t = 0; t <= n; ++t)
        for (int m = 0; m + t <= n; ++m) {
            SchurClass piece;
            for (const auto& [p, c] : x.terms())
                if (p.weight() == n - t - m) piece.add(p, c);
            if (piece.is_zero()) continue;
            SchurClass term = convolution_class(convolution_class(piece, SchurClass::of(Partition::row(m))),
                                                SchurClass::of(Partition::column(t)));
            out += (t % 2 == 0 ? 1 : -1) * term;
        }
    return out;
}

} // namespace fsprim
