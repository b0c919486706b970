// Copyright 2026 The qpow Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file dense_oracle.hpp
 * Test-only reference simulator: every gate is expanded to a full
 * 2^n x 2^n matrix with Kronecker products and the circuit unitary is the
 * ordered matrix product. Shares nothing with the in-place kernels.
 */
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "qpow/circuit.hpp"

namespace qpow::oracle {

using C = std::complex<double>;

struct Dense {
    std::size_t dim{0};
    std::vector<C> a; // row-major

    explicit Dense(std::size_t d) : dim{d}, a(d * d, C{0, 0}) {}
    C &operator()(std::size_t r, std::size_t c) { return a[r * dim + c]; }
    C operator()(std::size_t r, std::size_t c) const { return a[r * dim + c]; }

    static Dense identity(std::size_t d) {
        Dense m{d};
        for (std::size_t i = 0; i < d; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }
};

inline Dense kron(const Dense &x, const Dense &y) {
    Dense out{x.dim * y.dim};
    for (std::size_t i = 0; i < x.dim; ++i) {
        for (std::size_t j = 0; j < x.dim; ++j) {
            for (std::size_t k = 0; k < y.dim; ++k) {
                for (std::size_t l = 0; l < y.dim; ++l) {
                    out(i * y.dim + k, j * y.dim + l) = x(i, j) * y(k, l);
                }
            }
        }
    }
    return out;
}

inline Dense matmul(const Dense &x, const Dense &y) {
    Dense out{x.dim};
    for (std::size_t i = 0; i < x.dim; ++i) {
        for (std::size_t k = 0; k < x.dim; ++k) {
            const C xik = x(i, k);
            for (std::size_t j = 0; j < x.dim; ++j) {
                out(i, j) += xik * y(k, j);
            }
        }
    }
    return out;
}

inline Dense add(const Dense &x, const Dense &y) {
    Dense out{x.dim};
    for (std::size_t i = 0; i < x.a.size(); ++i) {
        out.a[i] = x.a[i] + y.a[i];
    }
    return out;
}

inline Dense single(C m00, C m01, C m10, C m11) {
    Dense m{2};
    m(0, 0) = m00;
    m(0, 1) = m01;
    m(1, 0) = m10;
    m(1, 1) = m11;
    return m;
}

inline Dense rx(double t) {
    const C c{std::cos(t / 2), 0};
    const C s{0, -std::sin(t / 2)};
    return single(c, s, s, c);
}

inline Dense rz(double t) {
    return single(std::exp(C{0, -t / 2}), 0, 0, std::exp(C{0, t / 2}));
}

/// I x ... x op(qubit q) x ... x I with qubit 0 leftmost.
inline Dense embed(const Dense &op, std::size_t q, std::size_t n) {
    Dense out = Dense::identity(1);
    for (std::size_t k = 0; k < n; ++k) {
        out = kron(out, k == q ? op : Dense::identity(2));
    }
    return out;
}

/// |0><0|_c x I + |1><1|_c x U_t
inline Dense controlled(const Dense &u, std::size_t control, std::size_t target,
                        std::size_t n) {
    const Dense p0 = single(1, 0, 0, 0);
    const Dense p1 = single(0, 0, 0, 1);
    Dense off = Dense::identity(1);
    Dense on = Dense::identity(1);
    for (std::size_t k = 0; k < n; ++k) {
        off = kron(off, k == control ? p0 : Dense::identity(2));
        on = kron(on, k == control ? p1 : (k == target ? u : Dense::identity(2)));
    }
    return add(off, on);
}

inline Dense gate_matrix(const Gate &g, std::size_t n) {
    switch (g.kind) {
    case GateKind::RX:
        return embed(rx(g.angle), g.target, n);
    case GateKind::RZ:
        return embed(rz(g.angle), g.target, n);
    case GateKind::CRX:
        return controlled(rx(g.angle), *g.control, g.target, n);
    }
    return Dense::identity(std::size_t{1} << n);
}

inline Dense circuit_unitary(const Circuit &c) {
    const std::size_t n = c.n_qubits();
    Dense u = Dense::identity(std::size_t{1} << n);
    for (const auto &g : c.gates()) {
        u = matmul(gate_matrix(g, n), u);
    }
    return u;
}

/// Column 0 of the circuit unitary: the state reached from |0...0>.
inline std::vector<C> final_state(const Circuit &c) {
    const Dense u = circuit_unitary(c);
    std::vector<C> psi(u.dim);
    for (std::size_t i = 0; i < u.dim; ++i) {
        psi[i] = u(i, 0);
    }
    return psi;
}

/// Exhaustive argmax of |psi_i|^2, first maximum wins.
inline std::size_t argmax_probability(const std::vector<C> &psi) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < psi.size(); ++i) {
        if (std::norm(psi[i]) > std::norm(psi[best])) {
            best = i;
        }
    }
    return best;
}

} // namespace qpow::oracle
