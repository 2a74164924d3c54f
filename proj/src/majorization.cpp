#include "detineq/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>

#include "detineq/error.hpp"
#include "detineq/matrix.hpp"

namespace detineq {

namespace {

using majorization_tolerance::kAbsolute;
using majorization_tolerance::kRelative;

// Head entries within this relative distance of the source count as equal.
constexpr double kHeadTolerance = 1e-12;

bool leq(double x, double y) { return x <= y * (1.0 + kRelative) + kAbsolute; }

bool approx_eq(double x, double y) {
    return std::abs(x - y) <= kRelative * std::max(std::abs(x), std::abs(y)) + kAbsolute;
}

void require_same_length(std::size_t n, std::size_t m, const char* what) {
    if (n != m)
        throw Error(ErrorKind::LengthMismatch,
                    std::string(what) + ": lengths " + std::to_string(n) + " and " + std::to_string(m));
}

void require_valid(std::span<const double> v) {
    if (v.empty()) throw Error(ErrorKind::InvalidArgument, "vectors must be non-empty");
    for (double x : v)
        if (!std::isfinite(x) || x < 0.0)
            throw Error(ErrorKind::InvalidArgument, "vector entries must be finite and non-negative");
}

std::vector<double> sorted_desc(std::span<const double> v) {
    std::vector<double> out(v.begin(), v.end());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

double f_sorted(std::span<const double> v, std::span<const double> c) {
    const auto s = sorted_desc(v);
    return schur_product_f(s, c);
}

void require_majorized(const OrderedVector& a, const OrderedVector& b) {
    require_same_length(a.size(), b.size(), "majorization");
    if (!log_majorizes(a.values(), b.values()))
        throw Error(ErrorKind::NotMajorized, "a is not multiplicatively majorized by b");
}

// Applies the two-branch update to positions (head, pivot) of beta.
TransformStep transform_at(std::span<const double> a, std::vector<double>& beta, std::size_t head,
                           std::size_t pivot) {
    TransformStep step;
    step.index_one = head;
    step.index_l1 = pivot;
    step.before = beta;
    const double product = beta[head] * beta[pivot];
    if (product <= a[head] * a[pivot]) {
        step.case_tag = TransformCase::HeadFixed;
        beta[head] = a[head];
        beta[pivot] = product / a[head];
    } else {
        step.case_tag = TransformCase::PivotFixed;
        beta[head] = product / a[pivot];
        beta[pivot] = a[pivot];
    }
    step.after = beta;
    return step;
}

// First position in `active` after the head whose current entry is below the source.
std::optional<std::size_t> find_pivot(std::span<const double> a, std::span<const double> beta,
                                      std::span<const std::size_t> active) {
    for (std::size_t k = 1; k < active.size(); ++k)
        if (beta[active[k]] < a[active[k]]) return active[k];
    return std::nullopt;
}

} // namespace

OrderedVector::OrderedVector(std::vector<double> values) : values_(std::move(values)) {
    for (double x : values_)
        if (!std::isfinite(x) || x < 0.0)
            throw Error(ErrorKind::InvalidArgument, "ordered vector entries must be finite and non-negative");
    if (!is_non_increasing(values_))
        throw Error(ErrorKind::NotDescending, "ordered vector must be sorted in non-increasing order");
}

bool log_majorizes(std::span<const double> a, std::span<const double> b) {
    require_same_length(a.size(), b.size(), "log_majorizes");
    require_valid(a);
    require_valid(b);
    const auto sa = sorted_desc(a);
    const auto sb = sorted_desc(b);
    double pa = 1.0;
    double pb = 1.0;
    for (std::size_t k = 0; k < sa.size(); ++k) {
        pa *= sa[k];
        pb *= sb[k];
        if (k + 1 < sa.size() && !leq(pa, pb)) return false;
    }
    return approx_eq(pa, pb);
}

double schur_product_f(std::span<const double> a, std::span<const double> c) {
    require_same_length(a.size(), c.size(), "schur_product_f");
    const std::size_t n = a.size();
    double f = 1.0;
    for (std::size_t k = 0; k < n; ++k) f *= a[k] + c[n - 1 - k];
    return f;
}

const char* to_string(TransformCase c) noexcept {
    return c == TransformCase::HeadFixed ? "headFixed" : "pivotFixed";
}

std::vector<std::vector<double>> MajorizationChain::intermediates() const {
    std::vector<std::vector<double>> out;
    out.emplace_back(target.values().begin(), target.values().end());
    for (const auto& step : steps) out.push_back(step.after);
    if (closed_by_dominance) out.emplace_back(source.values().begin(), source.values().end());
    return out;
}

TransformStep pairwise_transform(const OrderedVector& a, const OrderedVector& b) {
    require_majorized(a, b);
    std::vector<double> beta(b.values().begin(), b.values().end());
    std::vector<std::size_t> all(a.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    const auto pivot = find_pivot(a.values(), beta, all);
    if (!pivot) throw Error(ErrorKind::NoPivot, "b dominates a elementwise; no pivot index exists");
    return transform_at(a.values(), beta, 0, *pivot);
}

MajorizationChain build_chain(const OrderedVector& a, const OrderedVector& b, const OrderedVector& c) {
    require_same_length(a.size(), c.size(), "build_chain weights");
    require_majorized(a, b);

    MajorizationChain chain{a, b, c, {}, {}, false};
    const auto src = a.values();
    std::vector<double> beta(b.values().begin(), b.values().end());
    chain.f_values.push_back(f_sorted(beta, c.values()));

    std::vector<std::size_t> active(a.size());
    for (std::size_t k = 0; k < active.size(); ++k) active[k] = k;

    while (active.size() > 1) {
        const std::size_t head = active.front();
        if (beta[head] <= src[head] * (1.0 + kHeadTolerance)) {
            active.erase(active.begin());
            continue;
        }
        const auto pivot = find_pivot(src, beta, active);
        if (!pivot) {
            double remaining = 1.0;
            for (std::size_t k : active) remaining *= src[k];
            if (remaining == 0.0) {
                chain.closed_by_dominance = true;
                chain.f_values.push_back(schur_product_f(src, c.values()));
                break;
            }
            // Positive product with every entry at or above the source: the
            // head excess is within the majorization tolerance.
            active.erase(active.begin());
            continue;
        }
        chain.steps.push_back(transform_at(src, beta, head, *pivot));
        chain.f_values.push_back(f_sorted(beta, c.values()));
        if (chain.steps.back().case_tag == TransformCase::HeadFixed)
            active.erase(active.begin());
        else
            active.erase(std::find(active.begin(), active.end(), *pivot));
    }
    return chain;
}

ChainAudit audit_chain(const MajorizationChain& chain) {
    ChainAudit audit;
    const std::size_t n = chain.source.size();
    auto close = [](double x, double y, double rel) {
        return std::abs(x - y) <= rel * std::max(std::abs(x), std::abs(y)) + 1e-300;
    };

    audit.monotone = !chain.f_values.empty();
    for (std::size_t k = 1; k < chain.f_values.size(); ++k)
        if (chain.f_values[k] > chain.f_values[k - 1] * (1.0 + kRelative)) audit.monotone = false;

    const auto path = chain.intermediates();
    auto equal_to = [&](const std::vector<double>& v, const OrderedVector& ref) {
        if (v.size() != ref.size()) return false;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!close(v[k], ref[k], 1e-12) && std::abs(v[k] - ref[k]) > kAbsolute) return false;
        return true;
    };
    audit.endpoints = equal_to(path.front(), chain.target) && equal_to(path.back(), chain.source);
    audit.within_step_bound = chain.steps.size() <= n * (n - 1) / 2;

    audit.products_preserved = true;
    audit.sandwiched = true;
    for (const auto& step : chain.steps) {
        const double before = step.before[step.index_one] * step.before[step.index_l1];
        const double after = step.after[step.index_one] * step.after[step.index_l1];
        if (!close(before, after, 1e-12)) audit.products_preserved = false;
        if (!log_majorizes(chain.source.values(), step.after) || !log_majorizes(step.after, step.before))
            audit.sandwiched = false;
    }
    return audit;
}

Lemma1Report verify_lemma1(const OrderedVector& a, const OrderedVector& b, const OrderedVector& c) {
    require_same_length(a.size(), c.size(), "verify_lemma1 weights");
    require_majorized(a, b);
    Lemma1Report report;
    report.f_a = schur_product_f(a.values(), c.values());
    report.f_b = schur_product_f(b.values(), c.values());
    report.holds = report.f_a <= report.f_b * (1.0 + kRelative);
    return report;
}

} // namespace detineq
