// A short walk through the library: build H_n, confirm it is wheel-free, compare
// its spectral radius with the closed form, and search small orders exhaustively.

#include <iostream>

#include "wheelfree/wheelfree.hpp"

int main() {
    using namespace wheelfree;

    for (int n = 4; n <= 12; ++n) {
        const Graph h = h_n(n);
        std::cout << "H_" << n << "  " << to_graph6(h) << "  wheel-free=" << is_wheel_free(h)
                  << "  rho=" << format_radius(rho_a(h)) << "  closed form " << closed_form_rho_a_text(n) << '\n';
    }

    const Graph w = wheel(6);
    if (auto witness = find_wheel_witness(w)) {
        std::cout << "W_6 hub " << witness->hub << ", rim";
        for (Vertex v : witness->rim) std::cout << ' ' << v;
        std::cout << '\n';
    }

    const auto q = quotient_matrix(h_n(9), coarsest_equitable(h_n(9)), MatrixKind::adjacency);
    std::cout << "quotient of H_9: " << q.to_string() << "  char poly " << char_poly(q).to_string() << '\n';

    for (int n = 4; n <= 7; ++n) {
        const auto report = max_spectral_radius(n, MatrixKind::adjacency);
        std::cout << "n=" << n << "  classes=" << report.class_count << "  max rho=" << format_radius(report.max_radius)
                  << "  extremal:";
        for (const auto& g6 : report.extremal) std::cout << ' ' << g6;
        std::cout << '\n';
    }
}
