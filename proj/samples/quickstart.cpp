// Small tour: multiply diagrams, compute a radical two ways, look at a kernel.
#include "brauer/brauer.hpp"

#include <iostream>

using namespace brauer;

int main() {
  const auto ctx = make_context(2, Rational(3));
  const auto h = QElement::diagram(ctx, make_h(1, 2, 2));
  std::cout << "H*H = 3H: " << std::boolalpha << (h * h == Rational(3) * h) << "\n\n";

  std::cout << render_diagram(parse_diagram("f=4;12/34;21")) << '\n';

  const auto b4 = make_context(4, Rational(0));
  const RadicalOracle rad(b4);
  std::cout << "dim B_4 = " << b4.dim() << ", dim Rad(B_4^(0)) = " << rad.dim()
            << ", block route: " << block_route_radical_dim(b4) << '\n';

  const auto space = BilinearSpace::orthogonal(1);
  const auto ctx2 = tensor_context(space, 2);
  std::cout << "dim Ker(pi_V), n=1, f=2: " << kernel_basis(ctx2, space).size() << '\n';
  std::cout << "order-2 minors span: " << independent_subset(enumerate_minors(ctx2, 2)).size() << '\n';
}
