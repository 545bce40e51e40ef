// Characteristic numbers of random curves of degrees 1..6 on a fixed frame.
// Each one comes out as (-1)^n.

#include <charnum/charnum.hpp>
#include <charnum/random.hpp>

#include <iostream>

int main() {
  using namespace charnum;
  gen::Engine rng(2026);
  const TriFrame f(ProjLine(1, 0, 0), ProjLine(0, 1, 0), ProjLine(1, 1, 2));
  for (int n = 1; n <= 6; ++n) {
    const HomCurve c = gen::frame_curve(rng, n, f);
    std::cout << "degree " << n << "  char number " << char_number(c, f).str() << '\n';
  }
  return 0;
}
