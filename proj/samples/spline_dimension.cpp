// Dimension of the C^1 quadratic spline space on a Morgan-Scott type
// triangulation, for the symmetric layout and a slightly perturbed one.

#include <charnum/charnum.hpp>

#include <iostream>

namespace {

void report(const char* name, const charnum::MSVertexData& d) {
  const auto r = charnum::spline_dim(charnum::ms_config_from_vertices(d));
  std::cout << name << ": dim=" << r.total_dim << " singular=" << (r.singular ? "true" : "false") << '\n';
}

}  // namespace

int main() {
  using charnum::ProjPoint;
  using charnum::Rational;
  charnum::MSVertexData d{ProjPoint(0, 0, 1),
                          ProjPoint(6, 0, 1),
                          ProjPoint(0, 6, 1),
                          ProjPoint(Rational(5, 2), Rational(5, 2), 1),
                          ProjPoint(1, Rational(5, 2), 1),
                          ProjPoint(Rational(5, 2), 1, 1)};
  report("symmetric", d);
  d.a = ProjPoint(Rational(5, 2), Rational(13, 5), 1);
  report("perturbed", d);
  return 0;
}
