#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmweil/fp_poly.hpp"

namespace cmweil {

/// y^2 = f(x) over F_q with f monic, squarefree, of odd degree 2g + 1.
class HyperellipticCurve {
 public:
  /// Coefficients low to high, reduced mod q.
  HyperellipticCurve(const Integer& q, const std::vector<Integer>& coefficients);

  const Integer& q() const { return ring_.modulus(); }
  const FpPoly& f() const { return f_; }
  int genus() const { return genus_; }
  const FpPolyRing& ring() const { return ring_; }

  /// `hyperelliptic:<q>:<c0,c1,...>`. Malformed text throws
  /// std::invalid_argument.
  static HyperellipticCurve parse(const std::string& text);
  std::string to_string() const;

 private:
  FpPolyRing ring_;
  FpPoly f_;
  int genus_ = 0;
};

/// Reduced divisor class in Mumford form: u monic, deg v < deg u <= g,
/// u | v^2 - f. The identity is (1, 0).
struct MumfordDivisor {
  FpPoly u{Integer(1)};
  FpPoly v;

  bool is_identity() const { return u.size() == 1 && v.empty(); }
  friend bool operator==(const MumfordDivisor& a, const MumfordDivisor& b) { return a.u == b.u && a.v == b.v; }
  friend bool operator!=(const MumfordDivisor& a, const MumfordDivisor& b) { return !(a == b); }
};

bool is_valid(const MumfordDivisor& d, const HyperellipticCurve& curve);
MumfordDivisor identity_divisor();
MumfordDivisor negate(const MumfordDivisor& d, const HyperellipticCurve& curve);
/// Cantor composition followed by reduction.
MumfordDivisor divisor_add(const MumfordDivisor& a, const MumfordDivisor& b, const HyperellipticCurve& curve);
/// [n]D; negative n multiplies -D.
MumfordDivisor scalar_mul(const Integer& n, const MumfordDivisor& d, const HyperellipticCurve& curve);
/// Sum of g random affine points.
MumfordDivisor random_divisor(const HyperellipticCurve& curve, Rng& rng);

/// Lower and upper Weil bounds (sqrt q -+ 1)^(2g), rounded inward.
std::pair<Integer, Integer> weil_interval(const Integer& q, int g);

struct OrderCheckResult {
  bool passed = false;
  bool in_weil_interval = false;
  /// Trials with [N]D = 0.
  int trials_killed = 0;
  int trials = 0;
  /// lcm of the orders of the sampled divisors.
  Integer exponent_lower_bound{1};
  /// Number of multiples of the exponent bound inside the Weil interval.
  Integer multiples_in_interval{0};
};

/// Probabilistic order test: N lies in the Weil interval, [N]D = 0 for every
/// sampled D, and N is the only multiple of the lcm of the sampled orders in
/// the Weil interval.
OrderCheckResult probable_order_check_report(const HyperellipticCurve& curve, const Integer& n, int trials, Rng& rng);
bool probable_order_check(const HyperellipticCurve& curve, const Integer& n, int trials, Rng& rng);

/// Smallest a in [1, a_bound] such that y^2 = x^p + a over F_q passes the
/// order check for the target.
std::optional<Integer> twist_search(unsigned p, const Integer& target_order, const Integer& q, const Integer& a_bound,
                                    Rng& rng, int trials = 10);

}  // namespace cmweil
