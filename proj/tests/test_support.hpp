#pragma once

#include <vector>

#include "cucalc/carriers.hpp"

namespace fixtures {

// {0, a, inf} with a+a = a, a+inf = inf+inf = inf.
inline cucalc::Carrier chain3() {
  cucalc::FiniteTable t;
  t.names = {"0", "a", "inf"};
  t.add = {0, 1, 2, 1, 1, 2, 2, 2, 2};
  t.leq = {1, 1, 1, 0, 1, 1, 0, 0, 1};
  return cucalc::Carrier::finite(t);
}

// {0, u} with u+u = u.
inline cucalc::Carrier two_point() {
  cucalc::FiniteTable t;
  t.names = {"0", "u"};
  t.add = {0, 1, 1, 1};
  t.leq = {1, 1, 0, 1};
  return cucalc::Carrier::finite(t);
}

// {0, x, y, t}: x, y incomparable idempotents with x+y = t.
inline cucalc::Carrier three_point_antichain() {
  cucalc::FiniteTable t;
  t.names = {"0", "x", "y", "t"};
  t.add = {0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 2, 3, 3, 3, 3, 3};
  t.leq = {1, 1, 1, 1, 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 0, 1};
  return cucalc::Carrier::finite(t);
}

inline std::vector<cucalc::Carrier> all_carriers() {
  using cucalc::Carrier;
  return {Carrier::extnat(),    Carrier::extnat(2), Carrier::pbar(), Carrier::m1(),
          Carrier::trunc(),     Carrier::trunc_hom(), Carrier::z(),  chain3(),
          two_point(),          three_point_antichain()};
}

}  // namespace fixtures
