#ifndef ORBITCAT_TESTS_NAKAYAMA_HPP
#define ORBITCAT_TESTS_NAKAYAMA_HPP

#include <vector>

// Independent model of the oriented 3-cycle 0 -> 1 -> 2 -> 0 with rad^2 = 0:
// its six indecomposables (S_0, S_1, S_2 and the uniserials with top v,
// socle v+1) as explicit representations over GF(p), and the matrix
// dim Hom(M_i, M_j) computed by solving the intertwining equations.
std::vector<std::vector<int>> nakayama_hom_matrix();

// True if a and b agree after one simultaneous row/column permutation,
// optionally after transposing b.
bool same_up_to_relabeling(std::vector<std::vector<int>> const &a,
                           std::vector<std::vector<int>> const &b);

#endif
