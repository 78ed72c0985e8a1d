#pragma once

#include <string>
#include <vector>

#include "twcy/linalg.hpp"
#include "twcy/presentation.hpp"

namespace twcy {

typedef std::vector<int> Word;

/**
 * Weight-truncated quadratic algebra T(V)/(R). The basis of each weight piece
 * consists of normal words: the words that are not the lexicographically
 * largest term of any element of the ideal.
 */
class GradedAlgebra {
public:
    GradedAlgebra() = default;
    // Builds weights 0..cutoff. With stop_at_zero the construction ends at the
    // first zero piece, and throws InputError if none appears up to cutoff.
    GradedAlgebra(const QuadraticPresentation& p, int cutoff, bool stop_at_zero = false);

    int num_generators() const { return ngen_; }
    int cutoff() const { return static_cast<int>(basis_.size()) - 1; }
    // Highest weight with a nonzero piece.
    int top() const;
    std::size_t dim(int m) const;
    std::vector<std::size_t> dims() const;
    const std::vector<Word>& basis(int m) const { return basis_.at(m); }
    long index(const Word& w) const;

    SparseVector normal_form(const Word& w) const;
    // Product of basis elements basis(p)[i] * basis(q)[j], in basis(p + q).
    SparseVector multiply(int p, long i, int q, long j) const;
    SparseVector multiply(int p, const SparseVector& a, int q, const SparseVector& b) const;
    // Right multiplication of an element of weight m by a generator.
    SparseVector times_generator(int m, const SparseVector& a, int x) const;
    SparseVector generator_times(int x, int m, const SparseVector& a) const;

    // Matrix on the weight-m piece of the algebra endomorphism whose value on
    // generators is given by the columns of gen_map.
    Matrix graded_map(const Matrix& gen_map, int m) const;

    std::string word_text(const Word& w, const std::vector<std::string>& names) const;

private:
    int ngen_ = 0;
    std::vector<std::vector<Word>> basis_;
    std::vector<std::vector<SparseVector>> ext_;
};

// Span of the relations as words, for reporting.
std::string relation_text(const SparseVector& r, const std::vector<std::string>& names);

}  // namespace twcy
