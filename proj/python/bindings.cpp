#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "triangulene/io.hpp"
#include "triangulene/oracle.hpp"

namespace py = pybind11;
using namespace triangulene;

namespace {

Band band_from(const std::string& b) {
    if (b == "+" || b == "plus") return Band::Plus;
    if (b == "-" || b == "minus") return Band::Minus;
    throw DomainError("band must be '+' or '-'");
}

py::dict label_dict(const StateLabel& lab) {
    py::dict d;
    if (lab.kind == StateLabel::Kind::Periodic) {
        d["kind"] = "periodic";
        d["q"] = lab.qn.q;
        d["p"] = lab.qn.p;
        d["band"] = to_string(lab.qn.band);
        d["branch"] = lab.qn.branch;
    } else {
        d["kind"] = "edge";
        d["l"] = lab.l;
        d["q"] = lab.qrep;
    }
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact spectra and eigenstates of zig-zag triangular graphene billiards";

    py::register_exception<SizeError>(m, "SizeError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<CountError>(m, "CountError", PyExc_ValueError);

    py::class_<TrianguleneLattice>(m, "Lattice")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("n", &TrianguleneLattice::size)
        .def_property_readonly("site_count", &TrianguleneLattice::site_count)
        .def_property_readonly("bond_count", &TrianguleneLattice::bond_count)
        .def("sites",
             [](const TrianguleneLattice& lat) {
                 py::list out;
                 for (const auto& s : lat.sites())
                     out.append(py::make_tuple(s.sub == Sublattice::A ? "A" : "B", s.n1, s.n2));
                 return out;
             })
        .def("positions",
             [](const TrianguleneLattice& lat) {
                 Eigen::MatrixXd pos(lat.site_count(), 2);
                 for (int i = 0; i < lat.site_count(); ++i) {
                     pos(i, 0) = lat.positions()[i].x;
                     pos(i, 1) = lat.positions()[i].y;
                 }
                 return pos;
             })
        .def("bonds",
             [](const TrianguleneLattice& lat) {
                 Eigen::MatrixXi b(lat.bond_count(), 2);
                 for (int i = 0; i < lat.bond_count(); ++i) {
                     b(i, 0) = lat.bonds()[i][0];
                     b(i, 1) = lat.bonds()[i][1];
                 }
                 return b;
             })
        .def("rotation", [](const TrianguleneLattice& lat) { return lat.rotation(); })
        .def("reflection", [](const TrianguleneLattice& lat) { return lat.reflection(); });

    m.def("layer_count", &layer_count, py::arg("n"));
    m.def(
        "rotation_center",
        [](int N) {
            auto rc = rotation_center(N);
            py::dict d;
            d["kind"] = rc.kind == CenterKind::HexagonCenter ? "hexagon-center"
                        : rc.kind == CenterKind::ASite       ? "A-atom"
                                                             : "B-atom";
            d["x"] = rc.coord.x;
            d["y"] = rc.coord.y;
            if (rc.site)
                d["site"] = py::make_tuple(rc.site->sub == Sublattice::A ? "A" : "B", rc.site->n1,
                                           rc.site->n2);
            return d;
        },
        py::arg("n"));

    m.def(
        "alpha", [](double k1, double k2) { return alpha({k1, k2}); }, py::arg("k1"),
        py::arg("k2"), "Structure factor 1 + exp(-i(k2-k1)) + exp(-i k2)");
    m.def(
        "dispersion", [](double k1, double k2) { return dispersion({k1, k2}); }, py::arg("k1"),
        py::arg("k2"));
    m.def(
        "star",
        [](double k1, double k2) {
            auto s = star({k1, k2});
            py::list pts;
            for (const auto& pt : s.points)
                pts.append(py::make_tuple(pt.k.k1, pt.k.k2, pt.phase));
            return py::make_tuple(pts, s.degenerate);
        },
        py::arg("k1"), py::arg("k2"),
        "12-member symmetry star: list of (k1, k2, phase) and a degeneracy flag");

    m.def(
        "quantized_k",
        [](int q, int p, int N) {
            auto k = quantized_k(q, p, N);
            return py::make_tuple(k.k1, k.k2);
        },
        py::arg("q"), py::arg("p"), py::arg("n"));
    m.def("verify_diophantine", &verify_diophantine, py::arg("q"), py::arg("p"), py::arg("n"),
          py::arg("tol") = 1e-10);
    m.def(
        "index_set",
        [](int N) {
            py::list out;
            for (const auto& pt : index_set(N))
                out.append(py::make_tuple(pt.q, pt.p, to_string(pt.cls)));
            return out;
        },
        py::arg("n"));
    m.def(
        "analytic_energies",
        [](int N) {
            auto e = analytic_spectrum(N).energies();
            return Eigen::Map<Eigen::VectorXd>(e.data(), static_cast<Eigen::Index>(e.size())).eval();
        },
        py::arg("n"), "All (n-1)^2 exact energies, ascending");
    m.def(
        "analytic_spectrum",
        [](int N) {
            py::list out;
            for (const auto& e : analytic_spectrum(N).entries) {
                py::dict d;
                d["E"] = e.energy;
                d["mult"] = e.multiplicity;
                py::list labs;
                for (const auto& lab : e.labels) {
                    py::dict ld;
                    if (lab.kind == SpectrumLabel::Kind::Periodic) {
                        ld["kind"] = "periodic";
                        ld["q"] = lab.qn.q;
                        ld["p"] = lab.qn.p;
                        ld["band"] = to_string(lab.qn.band);
                        ld["branch"] = lab.qn.branch;
                    } else {
                        ld["kind"] = "edge";
                        ld["l"] = lab.l;
                        ld["q"] = lab.qrep;
                    }
                    labs.append(ld);
                }
                d["labels"] = labs;
                out.append(d);
            }
            return out;
        },
        py::arg("n"));

    m.def(
        "build_periodic_state",
        [](int q, int p, int N, const std::string& band, int branch) {
            auto s = build_periodic_state({q, p, band_from(band), branch}, N);
            return py::make_tuple(Eigen::VectorXcd(s.amplitudes), s.energy);
        },
        py::arg("q"), py::arg("p"), py::arg("n"), py::arg("band") = "+", py::arg("branch") = 2,
        "Unit-norm eigenstate amplitudes (canonical site order) and its energy");

    m.def(
        "edge_basis",
        [](int N) {
            TrianguleneLattice lat(N);
            auto basis = edge_basis(lat);
            Eigen::MatrixXcd V(static_cast<Eigen::Index>(basis.states.size()), lat.site_count());
            py::list labels;
            for (std::size_t i = 0; i < basis.states.size(); ++i) {
                V.row(static_cast<Eigen::Index>(i)) = basis.states[i].amplitudes.transpose();
                labels.append(py::make_tuple(basis.states[i].l, basis.states[i].qrep));
            }
            return py::make_tuple(V, labels);
        },
        py::arg("n"), "Rows are the N-1 orthonormal zero-energy states; labels are (l, q)");

    m.def(
        "build_hamiltonian", [](int N) { return build_hamiltonian(TrianguleneLattice(N)); },
        py::arg("n"));
    m.def(
        "numerical_spectrum",
        [](int N) {
            auto es = numerical_spectrum(build_hamiltonian(TrianguleneLattice(N)));
            return py::make_tuple(es.values, es.vectors);
        },
        py::arg("n"), "Dense oracle eigendecomposition");
    m.def(
        "completeness_residual",
        [](int N) {
            TrianguleneLattice lat(N);
            return completeness_check(assemble_full_basis(lat));
        },
        py::arg("n"));
    m.def(
        "embedding_residual",
        [](int q, int p, int N, const std::string& band, int branch, int supercell) {
            return embedding_check({q, p, band_from(band), branch}, N, supercell).residual();
        },
        py::arg("q"), py::arg("p"), py::arg("n"), py::arg("band") = "-", py::arg("branch") = 2,
        py::arg("supercell") = 3);
    m.def("a_sublattice_vanishing_check", &a_sublattice_vanishing_check, py::arg("n"));
    m.def(
        "chain_reference",
        [](int M) {
            auto c = chain_reference(M);
            return py::make_tuple(c.energies, c.vectors);
        },
        py::arg("m"));
    m.def(
        "verify",
        [](int N, double tol) {
            auto rep = verify_billiard(N, tol);
            py::dict d;
            d["N"] = rep.N;
            d["max_spectral_deviation"] = rep.max_spectral_deviation;
            d["kernel_dim"] = rep.kernel_dim;
            d["completeness_residual"] = rep.completeness_residual;
            d["pass"] = rep.pass;
            d["failures"] = rep.failures;
            return d;
        },
        py::arg("n"), py::arg("tol") = 1e-9);

    m.def(
        "full_basis",
        [](int N) {
            TrianguleneLattice lat(N);
            auto states = assemble_full_basis(lat);
            Eigen::MatrixXcd V(static_cast<Eigen::Index>(states.size()), lat.site_count());
            Eigen::VectorXd E(static_cast<Eigen::Index>(states.size()));
            py::list labels;
            for (std::size_t i = 0; i < states.size(); ++i) {
                V.row(static_cast<Eigen::Index>(i)) = states[i].amplitudes.transpose();
                E(static_cast<Eigen::Index>(i)) = states[i].energy;
                labels.append(label_dict(states[i].label));
            }
            return py::make_tuple(V, E, labels);
        },
        py::arg("n"), "All (n-1)^2 analytic eigenstates as rows, with energies and labels");
}
