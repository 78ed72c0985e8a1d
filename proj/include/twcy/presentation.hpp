#pragma once

#include <string>
#include <vector>

#include "twcy/linalg.hpp"

namespace twcy {

/**
 * Generators x_0..x_{N-1} of weight 1 and a space of quadratic relations.
 * A relation is a sparse vector over the tensor square, index i*N + j
 * standing for the word x_i x_j.
 */
struct QuadraticPresentation {
    std::string family = "quadratic";
    std::vector<std::string> generators;
    std::vector<SparseVector> relations;

    int size() const { return static_cast<int>(generators.size()); }
    // Throws InputError unless there is a generator and the relations are independent.
    void validate() const;
};

std::vector<std::string> default_generator_names(int n);

// Relations x_j x_i - q_ij x_i x_j for i < j. Checks q_ii = 1 and q_ij q_ji = 1.
QuadraticPresentation quantum_affine(const Matrix& q, std::vector<std::string> names = {});

// Single relation f = sum m_ij x_i x_j. Checks that M is invertible.
QuadraticPresentation dimension2_m(const Matrix& m, std::vector<std::string> names = {});

// Closed forms of the Nakayama automorphism on generators, columns are images.
Matrix nakayama_closed_form_quantum(const Matrix& q);
Matrix nakayama_closed_form_m(const Matrix& m);

}  // namespace twcy
