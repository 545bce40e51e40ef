// Walks through the nine-point reference configuration: checks the cubic
// ratio product, applies the Pascal mapping and prints the conic through the
// six resulting points.

#include <charnum/charnum.hpp>

#include <iostream>

int main() {
  using namespace charnum;
  const NinePointConfig cfg = reference::config();
  const TriFrame& f = cfg.frame();

  std::cout << "frame vertices u=" << f.u() << " v=" << f.v() << " w=" << f.w() << '\n';
  std::cout << "ratio product " << cubic_ratio_product(cfg).str() << '\n';
  std::cout << "char number of the cubic " << char_number(reference::cubic(), f).str() << '\n';

  const PascalCubicResult r = pascal_type_cubic(cfg);
  for (const auto& p : r.points) std::cout << "  " << p << '\n';
  if (!r.conic) {
    std::cout << "no conic\n";
    return 1;
  }
  std::cout << "conic " << r.conic->str() << '\n';
  return 0;
}
