// Small tour of the lattice layer: take a fractional divisor class,
// canonicalize it, round it, and count sections of its multiples.
#include <iostream>

#include <k3deg/lattice.hpp>
#include <k3deg/ns_model.hpp>

using k3deg::Rat;

int main() {
    using namespace k3deg::lattice;

    // A degree 2/5 polarisation supported on the root chain. Its small
    // multiples round to classes with very few sections.
    Vec d = parse_vec(
        "1/2;0,1/2,1,1,1,1,1,1,1,1,1,1,1,1,6/5,4/5,2/5;3/5|0,0");
    d = canonicalize(d);
    std::cout << "class    " << format_vec(d) << "\n";
    std::cout << "square   " << pair(d, d).str() << "\n";
    std::cout << "nef      " << (nef(d) ? "yes" : "no") << "\n\n";

    for (int n = 1; n <= 8; ++n) {
        Vec fl = k3deg::ns_model::floor_multiple(d, n);
        Rat rr = riemann_roch(fl);
        std::cout << "n=" << n << "  square " << pair(fl, fl).str()
                  << "  sections " << rr.str() << "\n";
    }
    return 0;
}
