#include "twcy/presentation.hpp"

#include "twcy/errors.hpp"

namespace twcy {

void QuadraticPresentation::validate() const
{
    if (generators.empty())
        throw InputError("presentation has no generators");
    long n2 = static_cast<long>(size()) * size();
    EchelonSpan span;
    for (std::size_t r = 0; r < relations.size(); ++r) {
        for (const auto& [k, v] : relations[r])
            if (k < 0 || k >= n2)
                throw InputError("relation " + std::to_string(r) + " has an index outside the tensor square");
        if (!span.add(relations[r]))
            throw InputError("relation " + std::to_string(r) + " is linearly dependent on the previous ones");
    }
}

std::vector<std::string> default_generator_names(int n)
{
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back("x" + std::to_string(i + 1));
    return names;
}

QuadraticPresentation quantum_affine(const Matrix& q, std::vector<std::string> names)
{
    int n = static_cast<int>(q.rows());
    if (q.cols() != q.rows() || n == 0)
        throw InputError("q-matrix must be square and nonempty");
    for (int i = 0; i < n; ++i) {
        if (q.at(i, i) != 1)
            throw InputError("q[" + std::to_string(i) + "][" + std::to_string(i) + "] must be 1");
        for (int j = i + 1; j < n; ++j)
            if (q.at(i, j) * q.at(j, i) != 1)
                throw InputError("q[" + std::to_string(i) + "][" + std::to_string(j) + "] * q[" +
                                 std::to_string(j) + "][" + std::to_string(i) + "] != 1");
    }
    QuadraticPresentation p;
    p.family = "quantum-affine";
    p.generators = names.empty() ? default_generator_names(n) : names;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            SparseVector r;
            r[j * n + i] = 1;
            r[i * n + j] = -q.at(i, j);
            p.relations.push_back(r);
        }
    p.validate();
    return p;
}

QuadraticPresentation dimension2_m(const Matrix& m, std::vector<std::string> names)
{
    int n = static_cast<int>(m.rows());
    if (m.cols() != m.rows() || n == 0)
        throw InputError("M must be square and nonempty");
    if (rank(m) != m.rows())
        throw InputError("M is singular");
    QuadraticPresentation p;
    p.family = "dimension-2-M";
    p.generators = names.empty() ? default_generator_names(n) : names;
    SparseVector r;
    for (int i = 0; i < n; ++i)
        for (const auto& [j, v] : m.row(i))
            r[i * n + j] = v;
    p.relations.push_back(r);
    p.validate();
    return p;
}

Matrix nakayama_closed_form_quantum(const Matrix& q)
{
    std::size_t n = q.rows();
    Matrix s(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational c = 1;
        for (std::size_t j = 0; j < n; ++j)
            c *= q.at(j, i);
        s.set(i, i, c);
    }
    return s;
}

Matrix nakayama_closed_form_m(const Matrix& m) { return scale(m.transpose() * inverse(m), -1); }

}  // namespace twcy
