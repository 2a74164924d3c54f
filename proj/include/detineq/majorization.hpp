#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace detineq {

/// Non-negative finite reals in non-increasing order.
class OrderedVector {
public:
    OrderedVector() = default;
    /// Throws InvalidArgument for negative/non-finite entries, NotDescending if unsorted.
    explicit OrderedVector(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t k) const { return values_[k]; }
    std::span<const double> values() const noexcept { return values_; }

    friend bool operator==(const OrderedVector&, const OrderedVector&) = default;

private:
    std::vector<double> values_;
};

namespace majorization_tolerance {
inline constexpr double kRelative = 1e-9;
inline constexpr double kAbsolute = 1e-12;
} // namespace majorization_tolerance

/**
 * True iff a ≺× b: every leading partial product of a is at most that of b
 * (relative slack 1e-9, absolute floor 1e-12) and the total products agree
 * to the same tolerance. Both inputs are sorted descending internally, so
 * raw position-ordered vectors may be passed. Products are formed directly,
 * without logarithms, so zero entries are handled.
 *
 * Throws LengthMismatch for unequal lengths and InvalidArgument for empty,
 * negative or non-finite input.
 */
bool log_majorizes(std::span<const double> a, std::span<const double> b);

/// f(a) = ∏ₖ (aₖ + c_{N+1−k}): the k-th entry of a is paired with the k-th
/// entry of c counted from the back. Positional; nothing is sorted.
double schur_product_f(std::span<const double> a, std::span<const double> c);

enum class TransformCase {
    HeadFixed,  ///< b₁b_l ≤ a₁a_l: β₁ = a₁, β_l = b₁b_l / a₁
    PivotFixed, ///< b₁b_l > a₁a_l: β₁ = b₁b_l / a_l, β_l = a_l
};

const char* to_string(TransformCase c) noexcept;

/// One product-preserving update of two entries. `before` and `after` are
/// full-length, position-ordered, and may be unsorted mid-chain.
struct TransformStep {
    std::size_t index_one = 0; ///< head of the active subproblem
    std::size_t index_l1 = 0;  ///< pivot: first active position with before < source
    std::vector<double> before;
    std::vector<double> after;
    TransformCase case_tag = TransformCase::HeadFixed;
};

struct MajorizationChain {
    OrderedVector source;  ///< a
    OrderedVector target;  ///< b
    OrderedVector weights; ///< c
    std::vector<TransformStep> steps;
    /// f at b, after every step, and finally at a when closed_by_dominance.
    /// Evaluated on the re-sorted intermediate vector.
    std::vector<double> f_values;
    /// Zero-product tail: the remaining entries dominate a elementwise and no
    /// pivot exists, so the chain ends with a direct componentwise reduction.
    bool closed_by_dominance = false;

    /// b, each step's `after`, and a (when closed_by_dominance).
    std::vector<std::vector<double>> intermediates() const;
};

/// The pairwise transformation applied to the whole vector (head = position 0).
/// Throws NotMajorized unless a ≺× b, NoPivot when no position has b_l < a_l.
TransformStep pairwise_transform(const OrderedVector& a, const OrderedVector& b);

/**
 * Walks b down to a by repeated pairwise transformations, following the
 * induction: after each step the position that now agrees with a (the head,
 * or the pivot) leaves the active set, and a head that already agrees is
 * dropped without a step. Entries keep their original positions, so the
 * pairing with c never changes.
 *
 * Throws NotMajorized unless a ≺× b, LengthMismatch on unequal lengths.
 */
MajorizationChain build_chain(const OrderedVector& a, const OrderedVector& b, const OrderedVector& c);

/// Invariant checks over a finished chain.
struct ChainAudit {
    bool monotone = false;           ///< f_values non-increasing, 1e-9 relative per step
    bool endpoints = false;          ///< starts at b, ends at a, 1e-12 relative elementwise
    bool within_step_bound = false;  ///< at most N(N−1)/2 steps
    bool products_preserved = false; ///< β₁β_l = b₁b_l per step, 1e-12 relative
    bool sandwiched = false;         ///< a ≺× after ≺× before per step

    bool ok() const noexcept {
        return monotone && endpoints && within_step_bound && products_preserved && sandwiched;
    }
};

ChainAudit audit_chain(const MajorizationChain& chain);

struct Lemma1Report {
    double f_a = 0.0;
    double f_b = 0.0;
    bool holds = false; ///< f_a ≤ f_b · (1 + 1e-9)
};

Lemma1Report verify_lemma1(const OrderedVector& a, const OrderedVector& b, const OrderedVector& c);

} // namespace detineq
