// Follows one antichain of [5]x[6] through every representation.

#include "macs/macs.hpp"

#include <iostream>

int main() {
    using namespace macs;
    const GridShape shape(5, 6);
    const PointSet a(shape, {{2, 4}, {4, 2}});

    const auto [nw, se] = step_matrices(a);
    std::cout << "antichain      " << format_points(a) << "\n\n";
    std::cout << "NW step matrix\n" << format_matrix(nw) << '\n';
    std::cout << "SE step matrix\n" << format_matrix(se) << '\n';

    const BinaryMatrix aug = augmentation_matrix(a, SetKind::Antichain);
    std::cout << "augmentation matrix\n" << format_matrix(aug);
    std::cout << "addable points " << format_points(aug.positions(1)) << "\n\n";

    const Word w = antichain_to_word(a);
    const PointSet chain = antichain_to_strict_chain(a);
    const Alignment al = strict_chain_to_alignment(chain);
    const AlignmentRows rows = render_alignment(al);
    std::cout << "word           " << w.str() << (word_is_maximal(w) ? "  (maximal)" : "  (not maximal)") << '\n';
    std::cout << "strict chain   " << format_points(chain) << '\n';
    std::cout << "walk           " << format_walk_primed(strict_chain_to_walk(chain)) << '\n';
    std::cout << "alignment      " << rows.first << "\n               " << rows.second << "\n\n";

    std::cout << "maximal antichains of [7]x[7]: " << count_maximal_simple(7, 7) << '\n';
    std::cout << "all antichains of [7]x[7]:     " << count_antichains(7, 7) << '\n';
    std::cout << "growth constant rho:           " << rho() << '\n';
}
