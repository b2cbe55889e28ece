#include "triangulene/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace triangulene {

std::string format_double(double x) {
    if (x == 0.0) x = 0.0; // drop the sign of -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

std::string sub_str(Sublattice s) { return s == Sublattice::A ? "A" : "B"; }

std::string label_json(const SpectrumLabel& lab) {
    std::ostringstream os;
    if (lab.kind == SpectrumLabel::Kind::Periodic) {
        os << R"({"kind":"periodic","q":)" << lab.qn.q << R"(,"p":)" << lab.qn.p
           << R"(,"band":")" << to_string(lab.qn.band) << R"(","branch":)" << lab.qn.branch << "}";
    } else {
        os << R"({"kind":"edge","l":)" << lab.l << R"(,"q":)" << lab.qrep << "}";
    }
    return os.str();
}

std::string label_json(const StateLabel& lab) {
    SpectrumLabel s;
    if (lab.kind == StateLabel::Kind::Periodic) {
        s.kind = SpectrumLabel::Kind::Periodic;
        s.qn = lab.qn;
    } else {
        s.kind = SpectrumLabel::Kind::Edge;
        s.l = lab.l;
        s.qrep = lab.qrep;
    }
    return label_json(s);
}

// Phase hue for complex amplitudes, sign colours for real ones.
std::string amplitude_color(const std::complex<double>& z, bool complex_state) {
    if (!complex_state) return z.real() >= 0.0 ? "#c0392b" : "#2e6bb0";
    int hue = static_cast<int>(std::lround(std::arg(z) * 180.0 / std::numbers::pi));
    hue = ((hue % 360) + 360) % 360;
    return "hsl(" + std::to_string(hue) + ",70%,45%)";
}

} // namespace

std::string label_string(const StateLabel& lab) {
    std::ostringstream os;
    if (lab.kind == StateLabel::Kind::Periodic) {
        os << "q" << lab.qn.q << "_p" << lab.qn.p << "_"
           << (lab.qn.band == Band::Plus ? "plus" : "minus") << lab.qn.branch;
    } else {
        os << "l" << lab.l << "_q" << (lab.qrep < 0 ? "m1" : lab.qrep > 0 ? "p1" : "0");
    }
    return os.str();
}

std::string lattice_json(const TrianguleneLattice& lat) {
    std::ostringstream os;
    os << "{\"N\":" << lat.size() << ",\"sites\":[";
    for (int i = 0; i < lat.site_count(); ++i) {
        const auto& s = lat.sites()[i];
        const auto& p = lat.positions()[i];
        if (i) os << ",";
        os << R"({"sub":")" << sub_str(s.sub) << R"(","n1":)" << s.n1 << R"(,"n2":)" << s.n2
           << R"(,"x":)" << format_double(p.x) << R"(,"y":)" << format_double(p.y) << "}";
    }
    os << "],\"bonds\":[";
    for (std::size_t i = 0; i < lat.bonds().size(); ++i) {
        if (i) os << ",";
        os << "[" << lat.bonds()[i][0] << "," << lat.bonds()[i][1] << "]";
    }
    os << "]}";
    return os.str();
}

std::string spectrum_json(const SpectrumTable& table) {
    std::ostringstream os;
    os << "{\"N\":" << table.N << ",\"entries\":[";
    for (std::size_t i = 0; i < table.entries.size(); ++i) {
        const auto& e = table.entries[i];
        if (i) os << ",";
        os << "{\"E\":" << format_double(e.energy) << ",\"mult\":" << e.multiplicity
           << ",\"labels\":[";
        for (std::size_t j = 0; j < e.labels.size(); ++j) {
            if (j) os << ",";
            os << label_json(e.labels[j]);
        }
        os << "]}";
    }
    os << "]}";
    return os.str();
}

std::string spectrum_csv(int N) {
    std::ostringstream os;
    os << "q,p,class,E_plus\n";
    for (const auto& pt : index_set(N))
        os << pt.q << "," << pt.p << "," << to_string(pt.cls) << ","
           << format_double(energy(pt.q, pt.p, N)) << "\n";
    return os.str();
}

std::string state_csv(const StateVector& state, const TrianguleneLattice& lat) {
    std::ostringstream os;
    os << "sub,n1,n2,x,y,re,im\n";
    for (int i = 0; i < lat.site_count(); ++i) {
        const auto& s = lat.sites()[i];
        const auto& p = lat.positions()[i];
        os << sub_str(s.sub) << "," << s.n1 << "," << s.n2 << "," << format_double(p.x) << ","
           << format_double(p.y) << "," << format_double(state.amplitudes(i).real()) << ","
           << format_double(state.amplitudes(i).imag()) << "\n";
    }
    return os.str();
}

std::string state_json(const StateVector& state, const TrianguleneLattice& lat) {
    std::ostringstream os;
    os << "{\"N\":" << lat.size() << ",\"label\":" << label_json(state.label)
       << ",\"energy\":" << format_double(state.energy) << ",\"sites\":[";
    for (int i = 0; i < lat.site_count(); ++i) {
        const auto& s = lat.sites()[i];
        const auto& p = lat.positions()[i];
        if (i) os << ",";
        os << R"({"sub":")" << sub_str(s.sub) << R"(","n1":)" << s.n1 << R"(,"n2":)" << s.n2
           << R"(,"x":)" << format_double(p.x) << R"(,"y":)" << format_double(p.y)
           << R"(,"re":)" << format_double(state.amplitudes(i).real())
           << R"(,"im":)" << format_double(state.amplitudes(i).imag()) << "}";
    }
    os << "]}";
    return os.str();
}

std::string state_svg(const StateVector& state, const TrianguleneLattice& lat) {
    const double scale = 40.0;
    const double margin = 30.0;
    double xmax = 0.0, ymax = 0.0, amax = 0.0;
    bool complex_state = false;
    for (int i = 0; i < lat.site_count(); ++i) {
        xmax = std::max(xmax, lat.positions()[i].x);
        ymax = std::max(ymax, lat.positions()[i].y);
        amax = std::max(amax, std::abs(state.amplitudes(i)));
        if (std::abs(state.amplitudes(i).imag()) > 1e-12) complex_state = true;
    }
    if (amax == 0.0) amax = 1.0;
    const double w = xmax * scale + 2 * margin;
    const double h = ymax * scale + 2 * margin;
    auto px = [&](double x) { return format_double(margin + x * scale); };
    auto py = [&](double y) { return format_double(h - margin - y * scale); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << format_double(w) << " "
       << format_double(h) << "\">\n";
    for (const auto& b : lat.bonds()) {
        const auto& p = lat.positions()[b[0]];
        const auto& q = lat.positions()[b[1]];
        os << "<line x1=\"" << px(p.x) << "\" y1=\"" << py(p.y) << "\" x2=\"" << px(q.x)
           << "\" y2=\"" << py(q.y) << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    }
    for (int i = 0; i < lat.site_count(); ++i) {
        const auto& p = lat.positions()[i];
        const double r = 0.45 * scale * std::abs(state.amplitudes(i)) / amax;
        os << "<circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"" << format_double(r)
           << "\" fill=\"" << amplitude_color(state.amplitudes(i), complex_state) << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string edges_json(const EdgeBasis& basis, const TrianguleneLattice& lat) {
    std::ostringstream os;
    os << "{\"N\":" << lat.size() << ",\"states\":[";
    for (std::size_t s = 0; s < basis.states.size(); ++s) {
        const auto& e = basis.states[s];
        if (s) os << ",";
        os << "{\"l\":" << e.l << ",\"q\":" << e.qrep << ",\"amplitudes\":[";
        for (int i = 0; i < lat.site_count(); ++i) {
            if (i) os << ",";
            os << "[" << format_double(e.amplitudes(i).real()) << ","
               << format_double(e.amplitudes(i).imag()) << "]";
        }
        os << "]}";
    }
    os << "]}";
    return os.str();
}

std::string field_csv(const std::vector<FieldSample>& field) {
    std::ostringstream os;
    os << "sub,n1,n2,x,y,re,im\n";
    for (const auto& f : field) {
        const Vec2 p = site_position({f.sub, f.n1, f.n2});
        os << sub_str(f.sub) << "," << f.n1 << "," << f.n2 << "," << format_double(p.x) << ","
           << format_double(p.y) << "," << format_double(f.value.real()) << ","
           << format_double(f.value.imag()) << "\n";
    }
    return os.str();
}

std::string field_json(const std::vector<FieldSample>& field) {
    std::ostringstream os;
    os << "{\"samples\":[";
    for (std::size_t i = 0; i < field.size(); ++i) {
        const auto& f = field[i];
        const Vec2 p = site_position({f.sub, f.n1, f.n2});
        if (i) os << ",";
        os << R"({"sub":")" << sub_str(f.sub) << R"(","n1":)" << f.n1 << R"(,"n2":)" << f.n2
           << R"(,"x":)" << format_double(p.x) << R"(,"y":)" << format_double(p.y)
           << R"(,"re":)" << format_double(f.value.real())
           << R"(,"im":)" << format_double(f.value.imag()) << "}";
    }
    os << "]}";
    return os.str();
}

std::string verify_json(const VerifyReport& rep) {
    std::ostringstream os;
    os << "{\"N\":" << rep.N << ",\"max_spectral_deviation\":"
       << format_double(rep.max_spectral_deviation) << ",\"kernel_dim\":" << rep.kernel_dim
       << ",\"completeness_residual\":" << format_double(rep.completeness_residual)
       << ",\"pass\":" << (rep.pass ? "true" : "false") << "}";
    return os.str();
}

std::string chain_csv(const ChainSpectrum& chain) {
    std::ostringstream os;
    os << "n,energy\n";
    for (int i = 0; i < chain.energies.size(); ++i)
        os << (i + 1) << "," << format_double(chain.energies(i)) << "\n";
    return os.str();
}

std::string chain_json(const ChainSpectrum& chain) {
    std::ostringstream os;
    os << "{\"M\":" << chain.energies.size() << ",\"energies\":[";
    for (int i = 0; i < chain.energies.size(); ++i) {
        if (i) os << ",";
        os << format_double(chain.energies(i));
    }
    os << "]}";
    return os.str();
}

} // namespace triangulene
