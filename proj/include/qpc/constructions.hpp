#ifndef QPC_CONSTRUCTIONS_HPP
#define QPC_CONSTRUCTIONS_HPP

#include <string>

#include "qpc/codes.hpp"

namespace qpc {

// n = (q^m - 1)/(q - 1), the admissible 1-perfect length for parameter m.
size_t hamming_length(unsigned q, unsigned m);

// m x n matrix whose columns are all nonzero vectors of GF(q)^m normalized
// to leading (topmost) coefficient 1, in lexicographic order with the top
// row most significant.
Matrix hamming_parity_check(unsigned q, unsigned m);

LinearCode hamming_code(unsigned q, unsigned m);
LinearCode simplex_code(unsigned q, unsigned m);

// The sum-zero code [n, n-1, 2]_q.
LinearCode trivial_mds(unsigned q, size_t n);

// Subcode of trivial_mds(q, q^m) cut out by the last q^m columns of the
// (q, m+1) parity-check matrix: parameters [q^m, q^m - (m+1), 3]_q.
LinearCode extract_cpp(unsigned q, unsigned m);

Code full_space(unsigned q, size_t n);

// Coset partition of trivial_mds(q, q^m) by extract_cpp(q, m): q^m parts
// of size q^(q^m - (m+1)), each of minimum distance 3.
Partition mds_partition(unsigned q, unsigned m);

// Coset partition of F_q^n by hamming_code(q, m): (q-1)n + 1 parts, each
// 1-perfect.
Partition space_partition(unsigned q, unsigned m);

// Partition directory format: "manifest.txt" with
// "q=<q> n=<n> parts=<k>", plus part<i>.code files in the canonical code
// format.
void write_partition_dir(const std::string& dir, const Partition& p);
Partition read_partition_dir(const std::string& dir);

}  // namespace qpc

#endif
