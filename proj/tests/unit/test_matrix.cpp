/*
 * Copyright 2026 The spinor-kummer developers
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

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "kummer/matrix.hpp"

using namespace kummer;

namespace {

// brute-force rank via enumeration of all square minors
int rank_by_minors(const Matrix<PrimeField>& m) {
    const PrimeField& k = m.field();
    int best = 0;
    int rmax = std::min(m.rows(), m.cols());
    for (int r = 1; r <= rmax; ++r) {
        std::vector<int> ri(r), ci(r);
        // iterate over all r-subsets of rows and columns
        std::vector<int> rsel(m.rows(), 0), csel(m.cols(), 0);
        std::fill(rsel.end() - r, rsel.end(), 1);
        bool found = false;
        do {
            std::fill(csel.begin(), csel.end(), 0);
            std::fill(csel.end() - r, csel.end(), 1);
            do {
                Matrix<PrimeField> sub(k, r, r);
                int a = 0;
                for (int i = 0; i < m.rows(); ++i) {
                    if (!rsel[i]) continue;
                    int b = 0;
                    for (int j = 0; j < m.cols(); ++j) {
                        if (!csel[j]) continue;
                        sub.at(a, b++) = m.at(i, j);
                    }
                    ++a;
                }
                if (!k.is_zero(matrix_det(sub))) found = true;
            } while (!found && std::next_permutation(csel.begin(), csel.end()));
        } while (!found && std::next_permutation(rsel.begin(), rsel.end()));
        if (found) best = r;
    }
    return best;
}

}  // namespace

TEST_CASE("row_reduce on identity and zero") {
    PrimeField k(7);
    auto id = Matrix<PrimeField>::identity(k, 4);
    auto rr = row_reduce(id);
    CHECK(rr.rank == 4);
    CHECK(rr.echelon == id);
    Matrix<PrimeField> z(k, 3, 5);
    auto rz = row_reduce(z);
    CHECK(rz.rank == 0);
    CHECK(rz.echelon == z);
}

TEST_CASE("row_reduce: rank matches the all-minors oracle and transform is invertible") {
    PrimeField k(7);
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        Matrix<PrimeField> m(k, 3, 5);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 5; ++j) m.at(i, j) = k.random(rng);
        auto rr = row_reduce(m);
        CHECK(rr.rank == rank_by_minors(m));
        CHECK(rr.transform * m == rr.echelon);
        CHECK(!k.is_zero(matrix_det(rr.transform)));
        // kernel vectors are annihilated exactly
        auto ker = kernel_basis(m);
        CHECK(ker.rows() == 5 - rr.rank);
        for (int r = 0; r < ker.rows(); ++r) {
            std::vector<std::uint64_t> v(5);
            for (int j = 0; j < 5; ++j) v[j] = ker.at(r, j);
            auto mv = m.apply(v);
            for (auto x : mv) CHECK(k.is_zero(x));
        }
    }
}

TEST_CASE("matrix inverse over Q") {
    RationalField q;
    Rng rng(2);
    for (int t = 0; t < 8; ++t) {
        Matrix<RationalField> m(q, 4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m.at(i, j) = q.random(rng);
        if (q.is_zero(matrix_det(m))) continue;
        CHECK(matrix_inverse(m) * m == Matrix<RationalField>::identity(q, 4));
    }
}
