#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "unint/integrals.hpp"
#include "unint/ratfunc.hpp"

namespace unint {

/// Closed fan with m doubled lines on one right dot: m!(n-1)!/(n+m-1)!.
RatFunc fan_integral(long m);

/// Z-shaped integral of |U_ij|^2m1 |U_il|^2m2 |U_kl|^2m3.
RatFunc z_integral(long m1, long m2, long m3);

/// Direct integral of disconnected lines with the given multiplicities.
RatFunc stack_integral(const std::vector<long>& multiplicities);

/// Fully opened double-fan [A_a]^alpha [A_b]^alpha, assembled from the
/// even-cycle class count (alpha!)^2 / prod i^{k_i} k_i!.
RatFunc special_double_fan(long alpha);

/// Closed double-fan branch: m_a/m_b solid and n_a/n_b dotted lines from the
/// two left dots into one merged right dot. Nonvanishing requires
/// m_a + m_b == n_a + n_b.
struct DoubleFanClosed {
    long m_a = 0, n_a = 0, m_b = 0, n_b = 0;

    long pairs() const { return m_a + m_b; }
};

/// Exponents of the four basic right-dot patterns of an opened double-fan.
struct OpenedMonomial {
    long alpha_a = 0, alpha_b = 0, beta_a = 0, beta_b = 0;

    auto operator<=>(const OpenedMonomial&) const = default;
};

/// All opened graphs a closed double-fan spins off into, with their
/// multiplicities m_a! n_a! m_b! n_b! / (alpha_a! alpha_b! beta_a! beta_b!).
/// Throws InvalidClosedGraph when the line counts admit no opened graph.
std::vector<std::pair<BigInt, OpenedMonomial>> double_fan_expand(const DoubleFanClosed& closed);

/// Value of an opened monomial, reduced to [A_a]^a [A_b]^a form by the
/// alternating unitarity-sum formula; zero when alpha_a != alpha_b.
RatFunc reduce_opened(const OpenedMonomial& mono);

/// Value of a partially opened double-fan given as a product of closed
/// branches: expand every branch, merge the opened monomials, reduce.
RatFunc double_fan_value(const std::vector<DoubleFanClosed>& branches);

// ---------------------------------------------------------------------------
// Expression grammar for the command line:
//   "fan 3" | "z 2 1 1" | "stack 2 1" | "[Aa+2Ab][Aa]"
// ---------------------------------------------------------------------------

struct FanExpr {
    long m = 0;
};
struct ZExpr {
    long m1 = 0, m2 = 0, m3 = 0;
};
struct StackExpr {
    std::vector<long> parts;
};
struct DoubleFanExpr {
    std::vector<DoubleFanClosed> branches;
};

using ClosedExpr = std::variant<FanExpr, ZExpr, StackExpr, DoubleFanExpr>;

ClosedExpr parse_closed_expr(std::string_view text);
RatFunc evaluate_closed_expr(const ClosedExpr& expr);

// Diagram builders used for cross-checking closed forms against the
// group-theoretic engine.
IntegralSpec spec_for_fan(long m);
IntegralSpec spec_for_opened_fan(const std::vector<long>& multiplicities);
IntegralSpec spec_for_z(long m1, long m2, long m3);
IntegralSpec spec_for_stack(const std::vector<long>& multiplicities);
IntegralSpec spec_for_branches(const std::vector<DoubleFanClosed>& branches);
IntegralSpec spec_for_closed_expr(const ClosedExpr& expr);
/// Diagram whose value is the primitive integral xi[c].
IntegralSpec spec_for_primitive(const Partition& c);

}  // namespace unint
