#pragma once

// Linearized hom-spaces kFS(b, a) with their S_a x S_b actions, the
// restriction along injections, the primitive filtration, the map Theta into
// the dual of kFI, and the exterior powers of the reduced standard module.
//
// A filtration level kFS^t(b, a) is the joint kernel of restriction along all
// injections c -> b, c = b - t - 1. Restricting along i o pi (pi in S_c)
// permutes the target basis of the block of i, so one order-preserving
// injection per c-subset cuts out the same kernel; the internal code uses
// those C(b, c) blocks and fi_action_on_fs keeps the full |FI(c, b)| matrix.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fsprim/finsetcat.hpp"
#include "fsprim/ratlinalg.hpp"
#include "fsprim/repdecomp.hpp"

namespace fsprim {

/// kFlavor(b -> a) on its canonical basis. Left S_a acts by postcomposition,
/// right S_b by precomposition.
class HomModule {
public:
    HomModule(HomClass flavor, int b, int a);

    [[nodiscard]] HomClass flavor() const noexcept { return basis_.flavor(); }
    [[nodiscard]] int source_size() const noexcept { return basis_.source_size(); }
    [[nodiscard]] int target_size() const noexcept { return basis_.target_size(); }
    [[nodiscard]] std::size_t dimension() const noexcept { return basis_.size(); }
    [[nodiscard]] const HomBasis& basis() const noexcept { return basis_; }
    [[nodiscard]] const BiRepSpace& bimodule() const noexcept { return bimodule_; }

private:
    HomBasis basis_;
    BiRepSpace bimodule_;
};

/// Shared, memoized kFS(b, a).
[[nodiscard]] std::shared_ptr<const HomModule> fs_module(int b, int a);

/// Matrix of kFS(b, a) -> (+)_{i in FI(c, b)} kFS(c, a), [f] -> [f o i] or 0
/// when f o i is not surjective. Blocks in canonical FI(c, b) order.
/// Throws std::invalid_argument if c > b.
[[nodiscard]] RatMatrix fi_action_on_fs(int b, int a, int c);

/// Restriction of kFS(b, a) along the order-preserving injections c -> b,
/// one block per c-subset in lexicographic order.
class Restriction {
public:
    Restriction(int b, int a, int c);

    [[nodiscard]] int source_size() const noexcept { return b_; }
    [[nodiscard]] int target_size() const noexcept { return a_; }
    [[nodiscard]] int restricted_size() const noexcept { return c_; }
    [[nodiscard]] const std::vector<std::vector<int>>& subsets() const noexcept { return subsets_; }
    [[nodiscard]] std::size_t block_dimension() const noexcept { return block_dim_; }
    /// Index in kFS(c, a) of f restricted to subset k, or HomBasis::npos.
    [[nodiscard]] std::size_t image(std::size_t k, std::size_t f) const { return images_[k][f]; }

    /// Restriction of v to block k, as a sparse vector in kFS(c, a).
    [[nodiscard]] SparseVector apply_block(std::size_t k, const SparseVector& v) const;
    /// True if every block of the restriction of v vanishes.
    [[nodiscard]] bool annihilates(const SparseVector& v) const;
    /// The defining equations: one 0/1 row per (subset, target basis map).
    [[nodiscard]] std::vector<SparseVector> equations() const;

private:
    int b_;
    int a_;
    int c_;
    std::vector<std::vector<int>> subsets_;
    std::size_t block_dim_;
    std::vector<std::vector<std::size_t>> images_;
};

struct FiltrationLevel {
    int b = 0;
    int a = 0;
    int t = 0;
    std::shared_ptr<const Subspace> space;

    [[nodiscard]] RatMatrix basis_matrix() const { return space->basis(); }
    [[nodiscard]] std::size_t dimension() const { return space->dimension(); }
    /// kFS^t(b, a) as a sub-bimodule of kFS(b, a).
    [[nodiscard]] BiRepSpace bimodule() const;
};

/// kFS^t(b, a), memoized. t = -1 is zero; t >= b - a is everything.
[[nodiscard]] FiltrationLevel filtration_level(int b, int a, int t);
/// kFS^0(b, a).
[[nodiscard]] FiltrationLevel primitives(int b, int a);
/// Memoized Restriction(b, a, c).
[[nodiscard]] std::shared_ptr<const Restriction> restriction(int b, int a, int c);
/// The restriction whose kernel is level t, or nullptr if the level is 0 or all.
[[nodiscard]] std::shared_ptr<const Restriction> level_restriction(int b, int a, int t);
/// Bicharacter of kFS^t(b, a), memoized.
[[nodiscard]] const BiClassFunction& level_bicharacter(int b, int a, int t);
/// True if v (in kFS(b, a)) lies in kFS^t(b, a), tested on the defining equations.
[[nodiscard]] bool level_contains(int b, int a, int t, const SparseVector& v);

/// Bilinear extension of composition kFS(x, y) x kFS(b, x) -> kFS(b, y).
[[nodiscard]] SparseVector compose_vectors(const SparseVector& u, int x, int y, const SparseVector& v, int b);

/// A set of vectors generating `sub` as a module over the given
/// commuting actions (greedy orbit closure in pivot coordinates).
[[nodiscard]] std::vector<SparseVector> bimodule_generators(const BiRepSpace& module);

/// Composites of primitives(x, y) with primitives(b, x) lie in primitives(b, y).
/// Requires y <= x <= b.
[[nodiscard]] bool closure_check(int b, int x, int y);

/// Theta_a(b): rows index FI(a, b) (dual basis), columns FS(b, a);
/// entry (s, f) is 1 iff f o s = id.
[[nodiscard]] RatMatrix theta_matrix(int a, int b);
/// Column f of Theta as row indices into FI(a, b).
[[nodiscard]] std::vector<std::vector<std::size_t>> theta_columns(int a, int b);

/// D kFI(a, b) on the dual basis: left S_a, right S_b.
[[nodiscard]] BiRepSpace dual_fi_bimodule(int a, int b);

/// Action-then-Theta equals Theta-then-action for every adjacent
/// transposition on either side.
[[nodiscard]] bool theta_equivariance_check(int a, int b);

struct ThetaKernel {
    std::shared_ptr<const Subspace> kernel; // inside kFS(b, a)
    std::size_t rank = 0;
};
/// Kernel of Theta_a(b) computed from the sparse rows of Theta.
[[nodiscard]] ThetaKernel theta_kernel(int a, int b);

/// Class of D kFI(a, b) / image(Theta) from characters.
[[nodiscard]] BiSchurClass coker_theta_decompose(int a, int b);

/// Lambda^t of the reduced standard module of S_b (sum-zero vectors of k^b).
[[nodiscard]] RepSpace lambda_bar_rep(int t, int b);

/// Class of kFS^l(b, a) / kFS^(l-1)(b, a).
[[nodiscard]] BiSchurClass subquotient_decompose(int l, int b, int a);
/// Class of kFS^0(b, a).
[[nodiscard]] BiSchurClass primitives_decompose(int b, int a);
/// Class of kFS(b, a).
[[nodiscard]] BiSchurClass fs_decompose(int b, int a);

struct SesCell {
    int b = 0;
    int a = 0;
    BiSchurClass lhs;
    BiSchurClass rhs;
    bool classes_equal = false;
    /// Augmentation ideal acts trivially on the cokernel (only meaningful at b = a + l).
    bool augmentation_trivial = true;
};

struct SesReport {
    int l = 0;
    int bound = 0;
    std::vector<SesCell> cells;
    [[nodiscard]] bool passed() const;
    [[nodiscard]] bool vacuous() const { return cells.empty(); }
};

/// [kFS^(l/(l-1))] + [sgn_a x S_(l,1^a)] = [kFS^0 . triv_l] for a + l <= b <= bound.
[[nodiscard]] SesReport ses_check(int l, int bound);

/// Sign multiplicity of the right S_a action on kFS(a, c) is 0. Requires c < a.
[[nodiscard]] bool sgn_vanishing_check(int a, int c);

} // namespace fsprim
