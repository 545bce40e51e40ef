/*
   Copyright 2026 The charnum Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <charnum/curves.hpp>
#include <charnum/pascal.hpp>
#include <charnum/projective.hpp>

// The reference cubic with three rational secants: every intersection is
// rational, which makes it a convenient end-to-end fixture.

namespace charnum::reference {

inline HomCurve cubic() {
  return HomCurve(HomPoly(3, {-1120, 560, 0, -60, -450, 580, 1008, 1200, -1514, -729}));
}

/// a: x + z = 0, b: -y + z = 0, c: -x + z = 0.
inline TriFrame frame() { return {ProjLine(1, 0, 1), ProjLine(0, -1, 1), ProjLine(-1, 0, 1)}; }

inline NinePointConfig config() {
  auto r = [](long n, long d) { return Rational(n, d); };
  return {frame(),
          {ProjPoint(-4, -1, 4), ProjPoint(-1, r(-3, 2), 1), ProjPoint(2, -1, -2)},
          {ProjPoint(r(1, 4), 1, 1), ProjPoint(r(-1, 4), 1, 1), ProjPoint(r(1, 2), 1, 1)},
          {ProjPoint(1, r(-3, 2), 1), ProjPoint(1, r(-3, 4), 1), ProjPoint(1, r(47, 42), 1)}};
}

/// 4x^2 + 39xy - 65xz - 126y^2 + 312yz - 174z^2.
inline HomCurve conic() { return HomCurve(HomPoly(2, {4, 39, -65, -126, 312, -174})); }

}  // namespace charnum::reference
