#ifndef QPC_CONCAT_HPP
#define QPC_CONCAT_HPP

#include <map>

#include "qpc/codes.hpp"

namespace qpc {

// Inputs of the concatenation: a partition of F_q^n into 1-perfect codes,
// a partition of the sum-zero code of length (q-1)n + 1 into distance-3
// codes of size q^((q-1)n - m), and a permutation alpha of the part
// indices.  alpha is stored as its image list.
using Permutation = std::vector<size_t>;

// Throws PartitionInvalid / SizeMismatch when the hypotheses fail.
void validate_concat_input(const Partition& p1, const Partition& p2, const Permutation& alpha);

// C_alpha = { (u|v) : u in p1.parts[i], v in p2.parts[alpha[i]] }, a
// 1-perfect code of length qn + 1.  Inputs are re-validated on every call.
Code concatenate(const Partition& p1, const Partition& p2, const Permutation& alpha);

// Rank of C_alpha without assembling it: span of (part-0 basis | 0),
// (0 | part-0 basis) and the concatenated coset representatives.  Both
// partitions must be coset partitions of their zero parts, and alpha must
// align the zero parts so that 0 is a codeword.
size_t rank_of_alpha(const Partition& p1, const Partition& p2, const Permutation& alpha);

struct RankSurvey {
    std::map<size_t, uint64_t> counts;           // rank -> number of permutations
    std::map<size_t, Permutation> witnesses;     // rank -> lexicographically first alpha
    uint64_t total = 0;
};

struct Rank12Witness {
    Permutation alpha;
    Code code;
};

// Sweeps every permutation fixing the zero-part alignment (alpha[0] = 0)
// in lexicographic order; deterministic for any thread count.
RankSurvey sweep_ranks(const Partition& p1, const Partition& p2, unsigned threads = 1);

// First permutation (lexicographic, alpha[0] = 0) reaching rank 12 for
// q = 3, m = 2, plus the assembled code.  Throws NotFound if none exists.
Rank12Witness search_rank12(const Partition& p1, const Partition& p2);

// The 12 linearly independent witness vectors of the length-13 rank-12
// ternary code.
Matrix witness_vectors();

std::string format_permutation(const Permutation& alpha);
Permutation parse_permutation(const std::string& text);

}  // namespace qpc

#endif
