/*
 * Copyright 2026 The logsymp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "logsymp/error.hpp"
#include "logsymp/matrix.hpp"
#include "logsymp/pfaffian.hpp"

namespace logsymp {

/// Sorted vertex subset.
using Simplex = std::vector<std::size_t>;

/// Unordered vertex pair stored with i < j.
struct Edge {
    std::size_t i = 0;
    std::size_t j = 0;

    Edge() = default;
    Edge(std::size_t a, std::size_t b) : i(std::min(a, b)), j(std::max(a, b)) {
        if (a == b) throw Error(ErrorCode::BadVertex, "edge endpoints coincide");
    }

    Simplex simplex() const { return {i, j}; }
    bool contains(std::size_t v) const { return v == i || v == j; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class ComplexKind { ProjectiveSpace, AffineGerm, Custom };
enum class ChernMode { SumEqualsTwo, Vacuous, Unsupported };

/// Dual complex of a normal crossings divisor: vertices are components,
/// k-vertex faces are codimension-k strata.
class DualComplex {
public:
    static constexpr std::size_t kMaxVertices = 20;

    /// Downward closure of the facets.
    static DualComplex from_facets(std::size_t num_vertices, const std::vector<Simplex>& facets, ComplexKind kind,
                                   bool simply_connected_strata, ChernMode chern_mode, std::size_t half_dim = 0) {
        if (num_vertices > kMaxVertices) throw Error(ErrorCode::SizeGuard, "too many vertices");
        DualComplex c;
        c.num_vertices_ = num_vertices;
        c.kind_ = kind;
        c.half_dim_ = half_dim;
        c.simply_connected_ = simply_connected_strata;
        c.chern_mode_ = chern_mode;
        c.faces_.assign(std::size_t{1} << num_vertices, false);
        c.faces_[0] = true;
        for (const auto& f : facets) {
            std::uint32_t mask = 0;
            for (auto v : f) {
                if (v >= num_vertices) throw Error(ErrorCode::BadVertex, "facet vertex out of range");
                mask |= std::uint32_t{1} << v;
            }
            // Enumerate every submask of the facet.
            for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
                c.faces_[sub] = true;
                if (sub == 0) break;
            }
        }
        return c;
    }

    std::size_t num_vertices() const noexcept { return num_vertices_; }
    ComplexKind kind() const noexcept { return kind_; }
    /// n for ProjectiveSpace(n); 0 otherwise.
    std::size_t half_dimension() const noexcept { return half_dim_; }
    bool simply_connected_strata() const noexcept { return simply_connected_; }
    ChernMode chern_mode() const noexcept { return chern_mode_; }

    bool is_face_mask(std::uint32_t mask) const { return mask < faces_.size() && faces_[mask]; }

    bool is_face(std::span<const std::size_t> s) const {
        std::uint32_t mask = 0;
        for (auto v : s) {
            if (v >= num_vertices_) return false;
            mask |= std::uint32_t{1} << v;
        }
        return is_face_mask(mask);
    }

    bool is_face(const Edge& e) const { return is_face(e.simplex()); }

    /// All faces (including the empty one) sorted by (size, lexicographic).
    std::vector<Simplex> faces() const {
        std::vector<Simplex> out;
        for (std::uint32_t mask = 0; mask < faces_.size(); ++mask)
            if (faces_[mask]) out.push_back(to_simplex(mask));
        std::sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        return out;
    }

    std::vector<Simplex> faces_of_size(std::size_t k) const {
        std::vector<Simplex> out;
        for (auto& f : faces())
            if (f.size() == k) out.push_back(std::move(f));
        return out;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (std::size_t i = 0; i < num_vertices_; ++i)
            for (std::size_t j = i + 1; j < num_vertices_; ++j)
                if (is_face_mask((std::uint32_t{1} << i) | (std::uint32_t{1} << j))) out.emplace_back(i, j);
        return out;
    }

    /// Vertices carrying an order of the edge, ascending: those k with {i, j, k} a face.
    /// On projective space every other vertex counts, which only differs for P^2
    /// where the edge strata are points and the triangle is not a face.
    std::vector<std::size_t> opposite_vertices(const Edge& e) const {
        std::vector<std::size_t> out;
        const std::uint32_t base = (std::uint32_t{1} << e.i) | (std::uint32_t{1} << e.j);
        for (std::size_t k = 0; k < num_vertices_; ++k) {
            if (e.contains(k)) continue;
            if (kind_ == ComplexKind::ProjectiveSpace || is_face_mask(base | (std::uint32_t{1} << k))) out.push_back(k);
        }
        return out;
    }

    bool is_order_vertex(const Edge& e, std::size_t k) const {
        if (k >= num_vertices_ || e.contains(k) || !is_face(e)) return false;
        if (kind_ == ComplexKind::ProjectiveSpace) return true;
        return is_face(Simplex{e.i, e.j, k});
    }

    /// Maximal faces, sorted.
    std::vector<Simplex> facets() const {
        std::vector<Simplex> out;
        for (std::uint32_t mask = 0; mask < faces_.size(); ++mask) {
            if (!faces_[mask]) continue;
            bool maximal = true;
            for (std::size_t v = 0; v < num_vertices_ && maximal; ++v) {
                const std::uint32_t bit = std::uint32_t{1} << v;
                if (!(mask & bit) && faces_[mask | bit]) maximal = false;
            }
            if (maximal && mask != 0) out.push_back(to_simplex(mask));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const DualComplex& a, const DualComplex& b) {
        return a.num_vertices_ == b.num_vertices_ && a.kind_ == b.kind_ && a.half_dim_ == b.half_dim_ &&
               a.simply_connected_ == b.simply_connected_ && a.chern_mode_ == b.chern_mode_ && a.faces_ == b.faces_;
    }

private:
    Simplex to_simplex(std::uint32_t mask) const {
        Simplex s;
        for (std::size_t v = 0; v < num_vertices_; ++v)
            if (mask & (std::uint32_t{1} << v)) s.push_back(v);
        return s;
    }

    std::size_t num_vertices_ = 0;
    ComplexKind kind_ = ComplexKind::Custom;
    std::size_t half_dim_ = 0;
    bool simply_connected_ = false;
    ChernMode chern_mode_ = ChernMode::Unsupported;
    std::vector<bool> faces_;
};

using ComplexPtr = std::shared_ptr<const DualComplex>;

/// Boundary of the simplex on 2n+1 vertices: the coordinate hyperplanes of P^{2n}.
inline ComplexPtr projective_space_complex(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::SizeGuard, "projective space needs n >= 1");
    const std::size_t nv = 2 * n + 1;
    std::vector<Simplex> facets;
    for (std::size_t skip = 0; skip < nv; ++skip) {
        Simplex f;
        for (std::size_t v = 0; v < nv; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(std::move(f));
    }
    return std::make_shared<const DualComplex>(
        DualComplex::from_facets(nv, facets, ComplexKind::ProjectiveSpace, true, ChernMode::SumEqualsTwo, n));
}

/// Full simplex on d vertices: coordinate hyperplanes of an affine chart.
inline ComplexPtr affine_germ_complex(std::size_t d) {
    if (d == 0) throw Error(ErrorCode::SizeGuard, "affine germ needs at least one divisor component");
    Simplex all(d);
    std::iota(all.begin(), all.end(), std::size_t{0});
    return std::make_shared<const DualComplex>(
        DualComplex::from_facets(d, {all}, ComplexKind::AffineGerm, true, ChernMode::Vacuous));
}

/// Degree-two class of log symplectic type, stored through its full biresidue matrix.
class LogClass {
public:
    LogClass(ComplexPtr complex, QMatrix matrix) : complex_(std::move(complex)), matrix_(std::move(matrix)) {
        if (!complex_) throw Error(ErrorCode::InvalidClass, "missing complex");
        if (matrix_.rows() != complex_->num_vertices() || !matrix_.is_square()) {
            throw Error(ErrorCode::DimensionMismatch, "class matrix size differs from vertex count");
        }
        if (!matrix_.is_skew()) throw Error(ErrorCode::NotSkew, "class matrix is not skew-symmetric");
        if (complex_->kind() == ComplexKind::ProjectiveSpace) {
            for (std::size_t i = 0; i < matrix_.rows(); ++i) {
                Rational s(0);
                for (std::size_t j = 0; j < matrix_.cols(); ++j) s += matrix_(i, j);
                if (!s.is_zero()) throw Error(ErrorCode::InvalidClass, "projective class rows must sum to zero");
            }
        }
    }

    const DualComplex& complex() const noexcept { return *complex_; }
    const ComplexPtr& complex_ptr() const noexcept { return complex_; }
    const QMatrix& matrix() const noexcept { return matrix_; }
    std::size_t num_vertices() const noexcept { return matrix_.rows(); }

    const Rational& biresidue(const Edge& e) const { return matrix_(e.i, e.j); }

    /// Vertex relabeling v -> perm[v]. The complex must be invariant under it.
    LogClass permuted(std::span<const std::size_t> perm) const { return LogClass(complex_, matrix_.permuted(perm)); }

    LogClass scaled(const Rational& s) const { return LogClass(complex_, matrix_ * s); }

    friend bool operator==(const LogClass& a, const LogClass& b) {
        return *a.complex_ == *b.complex_ && a.matrix_ == b.matrix_;
    }

private:
    ComplexPtr complex_;
    QMatrix matrix_;
};

/// Lifts a 2n x 2n chart matrix (coordinates x_i/x_0) to the full zero-row-sum class.
inline LogClass chart_to_full(const QMatrix& chart) {
    if (!chart.is_skew()) throw Error(ErrorCode::NotSkew, "chart matrix is not skew-symmetric");
    if (chart.rows() == 0 || chart.rows() % 2 != 0) throw Error(ErrorCode::OddSize, "chart size must be even");
    const std::size_t m = chart.rows();
    QMatrix full(m + 1, m + 1);
    for (std::size_t i = 0; i < m; ++i) {
        Rational row_sum(0);
        for (std::size_t j = 0; j < m; ++j) {
            full(i + 1, j + 1) = chart(i, j);
            row_sum += chart(i, j);
        }
        full(0, i + 1) = row_sum;
        full(i + 1, 0) = -row_sum;
    }
    return LogClass(projective_space_complex(m / 2), std::move(full));
}

/// Chart matrix obtained by deleting one vertex.
inline QMatrix full_to_chart(const LogClass& cls, std::size_t deleted_vertex) {
    if (cls.complex().kind() != ComplexKind::ProjectiveSpace) {
        throw Error(ErrorCode::UnsupportedComplex, "charts exist only for projective space classes");
    }
    if (deleted_vertex >= cls.num_vertices()) throw Error(ErrorCode::BadVertex, "chart vertex out of range");
    std::vector<std::size_t> keep;
    for (std::size_t v = 0; v < cls.num_vertices(); ++v)
        if (v != deleted_vertex) keep.push_back(v);
    return cls.matrix().principal(keep);
}

/// Principal submatrix along a face, in ascending vertex order.
inline QMatrix biresidue(const LogClass& cls, std::span<const std::size_t> simplex) {
    if (!cls.complex().is_face(simplex)) throw Error(ErrorCode::NotAFace, "simplex is not a face of the complex");
    Simplex s(simplex.begin(), simplex.end());
    std::sort(s.begin(), s.end());
    return cls.matrix().principal(s);
}

/// Nondegeneracy of a projective class: chart Pfaffian nonzero.
inline bool is_nondegenerate(const LogClass& cls, std::size_t chart_vertex = 0) {
    return !pfaffian(full_to_chart(cls, chart_vertex)).is_zero();
}

/// The matrix whose Pfaffian decides whether a class is log symplectic.
///
/// Projective space: the chart at `chart_vertex`. Affine germ of even size: the
/// matrix itself. Affine germ of odd size: the matrix bordered by one extra
/// symplectic direction z with dz ∧ dlog y_i coefficient -1 for every i.
template <typename T>
Matrix<T> nondegeneracy_matrix(const DualComplex& complex, const Matrix<T>& full, std::size_t chart_vertex = 0) {
    switch (complex.kind()) {
        case ComplexKind::ProjectiveSpace: {
            std::vector<std::size_t> keep;
            for (std::size_t v = 0; v < full.rows(); ++v)
                if (v != chart_vertex) keep.push_back(v);
            return full.principal(keep);
        }
        case ComplexKind::AffineGerm: {
            if (full.rows() % 2 == 0) return full;
            const std::size_t d = full.rows();
            Matrix<T> b(d + 1, d + 1);
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = 0; j < d; ++j) b(i, j) = full(i, j);
                b(i, d) = T(-1);
                b(d, i) = T(1);
            }
            return b;
        }
        case ComplexKind::Custom: break;
    }
    throw Error(ErrorCode::UnsupportedComplex, "no nondegeneracy test for custom complexes");
}

inline bool is_log_symplectic(const LogClass& cls, std::size_t chart_vertex = 0) {
    return !pfaffian(nondegeneracy_matrix(cls.complex(), cls.matrix(), chart_vertex)).is_zero();
}

/// Affine triangle class with cyclic biresidues: b1 on {1,2}, b2 on {2,0}, b3 on {0,1}.
inline LogClass cyclic_triangle(const Rational& b1, const Rational& b2, const Rational& b3) {
    QMatrix m(3, 3);
    m(0, 1) = b3;
    m(1, 0) = -b3;
    m(1, 2) = b1;
    m(2, 1) = -b1;
    m(2, 0) = b2;
    m(0, 2) = -b2;
    return LogClass(affine_germ_complex(3), std::move(m));
}

}  // namespace logsymp
