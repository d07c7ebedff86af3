// Copyright (c) 2026 The polefind developers
// SPDX-License-Identifier: Apache-2.0

#ifndef POLEFIND_PROBLEMS_IO_HPP
#define POLEFIND_PROBLEMS_IO_HPP

// Text format for matrix polynomials (see README):
//   line 1:           "<d> <degree>"
//   per coefficient:  d*d lines "re im", row-major, A_0 first
// '#' starts a comment; blank lines are ignored.

#include <fstream>
#include <sstream>
#include <string>

#include "polefind/errors.hpp"
#include "polefind/problems/matrix_polynomial.hpp"

namespace polefind::problems {

namespace detail {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next_data_line(std::string& out) {
        std::string line;
        while (std::getline(in_, line)) {
            ++lineno_;
            const std::size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::size_t i = 0;
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i == line.size()) continue;
            out = line;
            return true;
        }
        return false;
    }

    int lineno() const { return lineno_; }

private:
    std::istream& in_;
    int lineno_ = 0;
};

}  // namespace detail

inline MatrixPolynomial read_polynomial(std::istream& in, const std::string& name = "<stream>") {
    detail::LineReader reader(in);
    std::string line;
    if (!reader.next_data_line(line))
        throw ParseError(name + ": empty input");
    Index d = 0;
    int degree = -1;
    {
        std::istringstream hs(line);
        if (!(hs >> d >> degree) || d < 1 || degree < 0)
            throw ParseError(name + ":" + std::to_string(reader.lineno()) +
                             ": malformed header, expected \"<d> <degree>\"");
    }
    MatrixPolynomial p;
    for (int c = 0; c <= degree; ++c) {
        ComplexMatrix a(d, d);
        for (Index i = 0; i < d; ++i)
            for (Index j = 0; j < d; ++j) {
                if (!reader.next_data_line(line))
                    throw ParseError(name + ": truncated input in coefficient " +
                                     std::to_string(c) + " (line " +
                                     std::to_string(reader.lineno()) + ")");
                std::istringstream es(line);
                double re = 0.0, im = 0.0;
                if (!(es >> re >> im))
                    throw ParseError(name + ":" + std::to_string(reader.lineno()) +
                                     ": malformed entry in coefficient " + std::to_string(c));
                a(i, j) = Cplx(re, im);
            }
        p.coefficients.push_back(std::move(a));
    }
    p.validate();
    return p;
}

inline MatrixPolynomial load_polynomial(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open");
    return read_polynomial(in, path);
}

inline void write_polynomial(std::ostream& out, const MatrixPolynomial& p) {
    out.precision(17);
    out << p.dimension() << " " << p.degree() << "\n";
    for (const ComplexMatrix& a : p.coefficients)
        for (Index i = 0; i < a.rows(); ++i)
            for (Index j = 0; j < a.cols(); ++j)
                out << std::scientific << a(i, j).real() << " " << a(i, j).imag() << "\n";
}

inline void save_polynomial(const std::string& path, const MatrixPolynomial& p) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open for writing");
    write_polynomial(out, p);
}

}  // namespace polefind::problems

#endif  // POLEFIND_PROBLEMS_IO_HPP
