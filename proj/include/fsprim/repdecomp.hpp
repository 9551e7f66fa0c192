#pragma once

// Character theory of the symmetric groups in characteristic zero.
//
// Representations are carried by signed permutation actions of the adjacent
// transpositions s_1, ..., s_{n-1} on a basis, optionally restricted to an
// invariant subspace given in pivot form. That covers every module the
// library builds: linearized hom-sets (plain permutations), exterior powers
// (signed permutations) and the kernels and images cut out of them. Traces on
// a pivot-form subspace need no matrix products, see RepSpace::trace.
//
// Bimodule classes are written as pairs (lambda, mu): lambda for the
// covariant (left, target) group and mu for the contravariant (right, source)
// group.

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fsprim/partitions.hpp"
#include "fsprim/ratlinalg.hpp"
#include "fsprim/rational.hpp"

namespace fsprim {

/// Raised when a computed decomposition is not a genuine (nonnegative,
/// integral) representation class: a corrupted module, not a math result.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Characters

/// chi_lambda(mu) by the Murnaghan-Nakayama rule. Throws
/// std::invalid_argument on a weight mismatch.
[[nodiscard]] std::int64_t mn_character(const Partition& lambda, const CycleType& mu);

/// Full table for S_n, rows and columns in canonical partition order.
struct CharacterTable {
    int degree = 0;
    std::vector<Partition> partitions;
    std::vector<std::uint64_t> class_sizes;
    std::vector<std::vector<std::int64_t>> values; // [irrep][class]
};

/// Memoized; safe to call concurrently.
[[nodiscard]] const CharacterTable& character_table(int n);

struct ClassFunction {
    int degree = 0;
    std::vector<Rational> values; // indexed like partitions_of(degree)

    friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

struct BiClassFunction {
    int left_degree = 0;
    int right_degree = 0;
    std::vector<std::vector<Rational>> values; // [left class][right class]

    friend bool operator==(const BiClassFunction&, const BiClassFunction&) = default;
};

ClassFunction operator-(const ClassFunction& lhs, const ClassFunction& rhs);
BiClassFunction operator-(const BiClassFunction& lhs, const BiClassFunction& rhs);

/// <f, g> = (1/n!) sum_g f(g) g(g), characters being real.
[[nodiscard]] Rational inner_product(const ClassFunction& f, const ClassFunction& g);
[[nodiscard]] ClassFunction irreducible_character(const Partition& lambda);

// ---------------------------------------------------------------------------
// Grothendieck-group classes

class SchurClass {
public:
    using Map = std::map<Partition, std::int64_t>;

    SchurClass() = default;
    SchurClass(std::initializer_list<std::pair<const Partition, std::int64_t>> terms);
    static SchurClass of(const Partition& lambda, std::int64_t coefficient = 1);

    [[nodiscard]] const Map& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::int64_t coefficient(const Partition& lambda) const;
    void add(const Partition& lambda, std::int64_t coefficient);

    /// Sum of coefficient * dim S_lambda.
    [[nodiscard]] std::int64_t dimension() const;

    SchurClass& operator+=(const SchurClass& rhs);
    SchurClass& operator-=(const SchurClass& rhs);
    friend SchurClass operator+(SchurClass lhs, const SchurClass& rhs) { return lhs += rhs; }
    friend SchurClass operator-(SchurClass lhs, const SchurClass& rhs) { return lhs -= rhs; }
    friend SchurClass operator*(std::int64_t k, const SchurClass& x);
    friend bool operator==(const SchurClass&, const SchurClass&) = default;

    [[nodiscard]] std::string to_string() const;

private:
    Map terms_;
};

class BiSchurClass {
public:
    using Key = std::pair<Partition, Partition>;
    using Map = std::map<Key, std::int64_t>;

    BiSchurClass() = default;
    BiSchurClass(std::initializer_list<std::pair<const Key, std::int64_t>> terms);
    static BiSchurClass of(const Partition& left, const Partition& right, std::int64_t coefficient = 1);
    /// x (+) y on the two sides: the class of S_left-side x S_right-side pairs.
    static BiSchurClass external(const SchurClass& left, const SchurClass& right);

    [[nodiscard]] const Map& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::int64_t coefficient(const Partition& left, const Partition& right) const;
    void add(const Partition& left, const Partition& right, std::int64_t coefficient);

    [[nodiscard]] std::int64_t dimension() const;
    /// Terms whose (left, right) weights equal (a, b).
    [[nodiscard]] BiSchurClass restricted_to(int a, int b) const;

    BiSchurClass& operator+=(const BiSchurClass& rhs);
    BiSchurClass& operator-=(const BiSchurClass& rhs);
    friend BiSchurClass operator+(BiSchurClass lhs, const BiSchurClass& rhs) { return lhs += rhs; }
    friend BiSchurClass operator-(BiSchurClass lhs, const BiSchurClass& rhs) { return lhs -= rhs; }
    friend BiSchurClass operator*(std::int64_t k, const BiSchurClass& x);
    friend bool operator==(const BiSchurClass&, const BiSchurClass&) = default;

    [[nodiscard]] std::string to_string() const;

private:
    Map terms_;
};

/// [{"partition":[2,1],"coefficient":1}, ...] in canonical order.
nlohmann::json to_json(const SchurClass& x);
/// [{"partitions":[[1],[2]],"coefficient":1}, ...] in canonical order.
nlohmann::json to_json(const BiSchurClass& x);
SchurClass schur_class_from_json(const nlohmann::json& j);
BiSchurClass bischur_class_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// Representations

/// e_i -> sign_i * e_{image_i}.
class SignedPermutation {
public:
    SignedPermutation() = default;
    explicit SignedPermutation(std::vector<std::uint32_t> image, std::vector<std::int8_t> signs = {});
    static SignedPermutation identity(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return image_.size(); }
    [[nodiscard]] std::uint32_t image(std::size_t i) const { return image_[i]; }
    [[nodiscard]] int sign(std::size_t i) const { return signs_.empty() ? 1 : signs_[i]; }
    [[nodiscard]] bool is_unsigned() const noexcept { return signs_.empty(); }

    /// The action of `this` followed by `next`.
    [[nodiscard]] SignedPermutation then(const SignedPermutation& next) const;
    [[nodiscard]] SignedPermutation inverse() const;
    /// Column i holds sign_i at row image_i.
    [[nodiscard]] RatMatrix matrix() const;

    friend bool operator==(const SignedPermutation& lhs, const SignedPermutation& rhs);

private:
    std::vector<std::uint32_t> image_;
    std::vector<std::int8_t> signs_; // empty means all +1
};

/// Rational trace of g acting on `sub` (nullptr means the whole ambient space).
[[nodiscard]] Rational subspace_trace(const SignedPermutation& g, const Subspace* sub);

/// A representation of S_n: generator i is the action of the adjacent
/// transposition (i+1, i+2). Generator relations are checked on construction.
class RepSpace {
public:
    RepSpace(int degree, std::size_t ambient_dimension, std::vector<SignedPermutation> generators,
             std::shared_ptr<const Subspace> subspace = nullptr);

    static RepSpace trivial(int n);
    static RepSpace regular(int n);
    /// S_n permuting the basis of k^n.
    static RepSpace natural(int n);
    static RepSpace zero(int n);

    [[nodiscard]] int degree() const noexcept { return degree_; }
    [[nodiscard]] std::size_t ambient_dimension() const noexcept { return ambient_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return subspace_ ? subspace_->dimension() : ambient_; }
    [[nodiscard]] const std::vector<SignedPermutation>& generators() const noexcept { return generators_; }
    [[nodiscard]] const Subspace* subspace() const noexcept { return subspace_.get(); }

    /// Product of generators realizing the standard permutation of cycle type mu.
    [[nodiscard]] SignedPermutation class_representative(const CycleType& mu) const;
    /// Matrix of generator i in the subspace basis coordinates.
    [[nodiscard]] RatMatrix generator_matrix(std::size_t i) const;
    /// True if every generator maps the subspace into itself.
    [[nodiscard]] bool is_stable() const;

private:
    int degree_;
    std::size_t ambient_;
    std::vector<SignedPermutation> generators_;
    std::shared_ptr<const Subspace> subspace_;
};

/// Commuting actions of S_a (left, covariant) and S_b (right, contravariant).
class BiRepSpace {
public:
    BiRepSpace(int left_degree, int right_degree, std::size_t ambient_dimension,
               std::vector<SignedPermutation> left_generators, std::vector<SignedPermutation> right_generators,
               std::shared_ptr<const Subspace> subspace = nullptr);

    [[nodiscard]] int left_degree() const noexcept { return left_degree_; }
    [[nodiscard]] int right_degree() const noexcept { return right_degree_; }
    [[nodiscard]] std::size_t ambient_dimension() const noexcept { return ambient_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return subspace_ ? subspace_->dimension() : ambient_; }
    [[nodiscard]] const std::vector<SignedPermutation>& left_generators() const noexcept { return left_; }
    [[nodiscard]] const std::vector<SignedPermutation>& right_generators() const noexcept { return right_; }
    [[nodiscard]] const Subspace* subspace() const noexcept { return subspace_.get(); }
    [[nodiscard]] std::shared_ptr<const Subspace> shared_subspace() const noexcept { return subspace_; }

    /// Same actions, restricted to an invariant subspace of the ambient space.
    [[nodiscard]] BiRepSpace restricted(std::shared_ptr<const Subspace> subspace) const;
    [[nodiscard]] RepSpace left_module() const;
    [[nodiscard]] RepSpace right_module() const;

private:
    int left_degree_;
    int right_degree_;
    std::size_t ambient_;
    std::vector<SignedPermutation> left_;
    std::vector<SignedPermutation> right_;
    std::shared_ptr<const Subspace> subspace_;
};

[[nodiscard]] ClassFunction rep_character(const RepSpace& v);
[[nodiscard]] BiClassFunction bicharacter(const BiRepSpace& v);

/// Multiplicities of a class function; throws ConsistencyError if one is
/// not integral, or negative when `require_genuine`.
[[nodiscard]] SchurClass decompose_character(const ClassFunction& chi, bool require_genuine = true);
[[nodiscard]] BiSchurClass decompose_bicharacter(const BiClassFunction& chi, bool require_genuine = true);

/// Also checks sum of multiplicity * dimension against dimension(v).
[[nodiscard]] SchurClass decompose(const RepSpace& v);
[[nodiscard]] BiSchurClass bidecompose(const BiRepSpace& v);

// ---------------------------------------------------------------------------
// Products

/// Horizontal strips: add n boxes, no two in a column.
[[nodiscard]] SchurClass pieri_h(const Partition& lambda, int n);
/// Vertical strips: add t boxes, no two in a row.
[[nodiscard]] SchurClass pieri_e(const Partition& lambda, int t);

/// Character of Ind_{S_p x S_q}^{S_{p+q}} (S_lambda x S_mu).
[[nodiscard]] ClassFunction induced_character(const Partition& lambda, const Partition& mu);
/// Decomposition of the induced character (Littlewood-Richardson coefficients).
[[nodiscard]] SchurClass induction_product(const Partition& lambda, const Partition& mu);

/// Induction product extended bilinearly. Pairs with a row or column factor
/// go through the Pieri rules; everything else through induction_product.
[[nodiscard]] SchurClass convolution_class(const SchurClass& x, const SchurClass& y);
/// Convolution in the right (contravariant) coordinate only.
[[nodiscard]] BiSchurClass biconvolution_right(const BiSchurClass& x, const SchurClass& y);

/// sum_{t=0}^{n} (-1)^t [triv_{n-t}] . [sgn_t] == 0.
[[nodiscard]] bool derham_check(int n);

/// The weight-n component of sum_t (-1)^t (x . triv) . sgn_t, where
/// x . triv = sum_m x . triv_m; only finitely many terms contribute.
[[nodiscard]] SchurClass invert_component(const SchurClass& x, int n);

} // namespace fsprim
