#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "triangulene/oracle.hpp"
#include "triangulene/states.hpp"

using namespace triangulene;

TEST_CASE("N=3 axial state is the star-graph eigenvector") {
    TrianguleneLattice lat(3);
    for (Band band : {Band::Plus, Band::Minus}) {
        StateVector s = build_periodic_state({1, 1, band, 2}, lat);
        const double e = band == Band::Plus ? std::sqrt(3.0) : -std::sqrt(3.0);
        CHECK(s.energy == doctest::Approx(e));

        // B amplitudes proportional to (1, 1, 1)
        std::vector<std::complex<double>> bamp;
        for (int i = 0; i < lat.site_count(); ++i)
            if (lat.sites()[i].sub == Sublattice::B) bamp.push_back(s.amplitudes(i));
        REQUIRE(bamp.size() == 3);
        CHECK(std::abs(bamp[0] - bamp[1]) < 1e-12);
        CHECK(std::abs(bamp[0] - bamp[2]) < 1e-12);

        Eigen::MatrixXd H = build_hamiltonian(lat);
        CHECK((H * s.amplitudes - s.energy * s.amplitudes).norm() < 1e-12);
    }
}

TEST_CASE("N=6 ground state comes from (1,1) branch 2 band minus") {
    TrianguleneLattice lat(6);
    StateVector s = build_periodic_state({1, 1, Band::Minus, 2}, lat);
    CHECK(s.energy == doctest::Approx(-std::sqrt(7.0)));

    const EigenSystem oracle = numerical_spectrum(build_hamiltonian(lat));
    CHECK(s.energy == doctest::Approx(oracle.values(0)).epsilon(1e-12));
    CHECK((build_hamiltonian(lat) * s.amplitudes - s.energy * s.amplitudes).norm() < 1e-9);
}

TEST_CASE("every analytic state is an eigenvector within 1e-9") {
    for (int N = 2; N <= 14; ++N) {
        TrianguleneLattice lat(N);
        Eigen::MatrixXd H = build_hamiltonian(lat);
        for (const auto& s : assemble_full_basis(lat)) {
            CHECK(std::abs(s.amplitudes.norm() - 1.0) < 1e-12);
            CHECK((H * s.amplitudes - s.energy * s.amplitudes).norm() < 1e-9);
        }
    }
}

TEST_CASE("branch 1 vanishes exactly on axial points") {
    for (int N : {3, 6, 9, 12}) {
        TrianguleneLattice lat(N);
        for (const auto& pt : index_set(N)) {
            for (Band band : {Band::Plus, Band::Minus}) {
                const double nrm =
                    periodic_branch_unnormalized({pt.q, pt.p, band, 1}, lat).norm();
                if (pt.cls == PointClass::Axial) {
                    CHECK(nrm < 1e-9);
                    CHECK_THROWS_AS(build_periodic_state({pt.q, pt.p, band, 1}, lat), DomainError);
                } else {
                    CHECK(nrm > 1e-3);
                }
            }
        }
    }
}

TEST_CASE("labels outside the index set are rejected") {
    TrianguleneLattice lat(6);
    CHECK_THROWS_AS(build_periodic_state({0, 0, Band::Plus, 2}, lat), DomainError);
    CHECK_THROWS_AS(build_periodic_state({5, 1, Band::Plus, 2}, lat), DomainError); // q > N-1-p
    CHECK_THROWS_AS(build_periodic_state({3, 3, Band::Plus, 2}, lat), DomainError); // p > floor((N-1)/2)
    CHECK_THROWS_AS(build_periodic_state({1, 2, Band::Plus, 2}, lat), DomainError); // q < p
    CHECK_THROWS_AS(build_periodic_state({2, 1, Band::Plus, 3}, lat), DomainError);
}

TEST_CASE("upper component vanishes on the three nodal lines") {
    const int N = 6;
    for (const auto& pt : index_set(N)) {
        for (int branch : {1, 2}) {
            if (branch == 1 && pt.cls == PointClass::Axial) continue;
            BlochSuperposition wave(quantized_k(pt.q, pt.p, N), Band::Plus);
            for (int n = 0; n <= N; ++n) {
                CHECK(std::abs(wave.upper(0, n)) < 1e-10);
                CHECK(std::abs(wave.upper(n, 0)) < 1e-10);
                CHECK(std::abs(wave.upper(n, N - n)) < 1e-10);
            }
        }
    }
}

TEST_CASE("same-energy states are orthonormal after assembly") {
    // N=12 contains an accidental degeneracy: (8,2) and (7,4) share E = 1.
    for (int N : {6, 12}) {
        TrianguleneLattice lat(N);
        auto states = assemble_full_basis(lat);
        std::map<long, std::vector<const StateVector*>> groups;
        for (const auto& s : states)
            groups[std::lround(std::abs(s.energy) * 1e6)].push_back(&s);
        for (const auto& [key, group] : groups) {
            // overlap matrix of every same-|E| cluster is the identity
            for (std::size_t i = 0; i < group.size(); ++i)
                for (std::size_t j = 0; j < group.size(); ++j) {
                    const std::complex<double> ov =
                        group[i]->amplitudes.dot(group[j]->amplitudes);
                    CHECK(std::abs(ov - (i == j ? 1.0 : 0.0)) < 1e-9);
                }
        }
    }
    TrianguleneLattice lat12(12);
    auto states = assemble_full_basis(lat12);
    int at_one = 0;
    for (const auto& s : states)
        if (std::abs(s.energy - 1.0) < 1e-9) ++at_one;
    CHECK(at_one == 4);
}

TEST_CASE("rotated states stay inside their energy eigenspace") {
    const int N = 7;
    TrianguleneLattice lat(N);
    const EigenSystem oracle = numerical_spectrum(build_hamiltonian(lat));
    for (const auto& s : assemble_full_basis(lat)) {
        Eigen::VectorXcd rotated = apply_rotation(s.amplitudes, lat);
        // projector onto the oracle eigenspace at this energy
        Eigen::VectorXcd residual = rotated;
        for (int i = 0; i < oracle.values.size(); ++i) {
            if (std::abs(oracle.values(i) - s.energy) > 1e-6) continue;
            Eigen::VectorXcd v = oracle.vectors.col(i).cast<std::complex<double>>();
            residual -= v.dot(rotated) * v;
        }
        CHECK(residual.norm() < 1e-9);
    }
}

TEST_CASE("extension restricted to the billiard reproduces the state") {
    const int N = 6;
    TrianguleneLattice lat(N);
    QuantumNumbers qn{2, 1, Band::Plus, 2};
    Eigen::VectorXd raw = periodic_branch_unnormalized(qn, lat);
    auto field = extend_state(qn, N, Window{0, N, 0, N});
    for (const auto& f : field) {
        int i = lat.index_of({f.sub, f.n1, f.n2});
        if (i < 0) continue;
        CHECK(std::abs(f.value.real() - raw(i)) < 1e-12);
        CHECK(std::abs(f.value.imag()) < 1e-12);
    }
}

TEST_CASE("extension vanishes on every image nodal line") {
    const int N = 6;
    for (const auto& qn : {QuantumNumbers{1, 1, Band::Minus, 2}, QuantumNumbers{3, 1, Band::Plus, 1}}) {
        auto field = extend_state(qn, N, Window{0, 3 * N, 0, 3 * N});
        for (const auto& f : field) {
            if (f.sub != Sublattice::A) continue;
            if (f.n1 % N == 0 || f.n2 % N == 0 || (f.n1 + f.n2) % N == 0)
                CHECK(std::abs(f.value) < 1e-10);
        }
    }
}

TEST_CASE("extension satisfies the three-neighbour recursion off the billiard") {
    const int N = 5;
    QuantumNumbers qn{2, 1, Band::Plus, 2};
    const double E = energy(2, 1, N);
    const Window w{-7, 17, -7, 17};
    auto field = extend_state(qn, N, w);
    auto at = [&](Sublattice sub, int n1, int n2) {
        const int cols = w.n1_max - w.n1_min + 1;
        const int row = n2 - w.n2_min, col = n1 - w.n1_min;
        const std::size_t cell = static_cast<std::size_t>(row * cols + col);
        const auto& f = field[2 * cell + (sub == Sublattice::A ? 0 : 1)];
        REQUIRE(f.n1 == n1);
        REQUIRE(f.n2 == n2);
        return f.value.real();
    };
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> pick(w.n1_min + 1, w.n1_max - 1);
    for (int trial = 0; trial < 100; ++trial) {
        const int n1 = pick(rng), n2 = pick(rng);
        const double a_res = at(Sublattice::B, n1, n2) + at(Sublattice::B, n1 + 1, n2 - 1) +
                             at(Sublattice::B, n1, n2 - 1) + E * at(Sublattice::A, n1, n2);
        const double b_res = at(Sublattice::A, n1, n2) + at(Sublattice::A, n1 - 1, n2 + 1) +
                             at(Sublattice::A, n1, n2 + 1) + E * at(Sublattice::B, n1, n2);
        CHECK(std::abs(a_res) < 1e-10);
        CHECK(std::abs(b_res) < 1e-10);
    }
}
