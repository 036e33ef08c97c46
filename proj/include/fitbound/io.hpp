#ifndef FITBOUND_IO_HPP
#define FITBOUND_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "fitbound/automorphism.hpp"
#include "fitbound/bigint.hpp"
#include "fitbound/group.hpp"

namespace fitbound {

// "(1 2 3)(4 5)" (cycle notation, 1-based) or "2 3 1 5 4" (image list);
// points beyond the text are fixed
Permutation parse_permutation(const std::string& text, int degree);

// smallest degree the text mentions
int permutation_text_degree(const std::string& text);

// Permutation file: one generator per line, cycle notation or image list,
// blank lines and '#' comments ignored. Cayley file: first line N, then N
// rows of N 1-based indices. The format is detected from the first line.
Group load_group_file(const std::string& path,
                      std::int64_t element_cap = kDefaultElementCap,
                      std::int64_t cayley_cap = kDefaultCayleyCap);

// lines "lhs -> rhs" with the same permutation syntax; the lhs elements must
// generate the group
Automorphism load_automorphism_file(const std::string& path, const Group& G);

// "[-2, 1]", "-2, 1" or "-2 1"
std::vector<Int> parse_int_list(const std::string& text);

}  // namespace fitbound

#endif
