#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "bqdirac/biquaternion.hpp"
#include "bqdirac/generators.hpp"
#include "bqdirac/mass_phase.hpp"
#include "bqdirac/spinor_vector.hpp"
#include "bqdirac/verify.hpp"

namespace bqdirac {

namespace {

std::string signed_term(Complex c, const std::string& name) {
  if (c == Complex(1.0)) return "+ " + name;
  if (c == Complex(-1.0)) return "- " + name;
  if (c == kI) return "+ i " + name;
  if (c == -kI) return "- i " + name;
  std::ostringstream os;
  os << "+ (" << c.real() << "," << c.imag() << ") " << name;
  return os.str();
}

std::string slots() {
  const TrinomialBasis b = canonical_basis();
  std::array<std::string, 4> rows;
  for (int which = 0; which < 2; ++which)
    for (int mu = 0; mu < 4; ++mu) {
      HalfSpinorPair p{FourVectorR{}, FourVectorR{}};
      (which == 0 ? p.B : p.N)(mu) = 1.0;
      const DiracSpinor psi = to_spinor(p, b);
      const std::string name = std::string(which == 0 ? "B" : "N") + "^" + std::to_string(mu);
      for (int a = 0; a < 4; ++a)
        if (psi(a) != Complex(0.0)) rows[static_cast<std::size_t>(a)] += " " + signed_term(psi(a), name);
    }
  std::ostringstream os;
  os << "Psi = Psi_1(B) + Psi_2(N) in the canonical basis\n";
  for (std::size_t a = 0; a < 4; ++a) {
    std::string r = rows[a];
    if (r.rfind(" + ", 0) == 0) r = " " + r.substr(3);
    os << "  slot " << a << ":" << r << '\n';
  }
  return os.str();
}

std::string units_table() {
  const MatrixUnits u = matrix_units(structure_constants(canonical_basis()));
  std::array<Matrix4C, 3> e;
  for (std::size_t a = 0; a < 3; ++a) e[a] = -kI * u.e[a + 1];
  auto name = [&](const Matrix4C& m) -> std::string {
    const Matrix4C id = Matrix4C::Identity();
    if (m == id) return "I";
    if (m == Matrix4C(-id)) return "-I";
    for (std::size_t c = 0; c < 3; ++c) {
      if (m == e[c]) return "e" + std::to_string(c + 1);
      if (m == Matrix4C(-e[c])) return "-e" + std::to_string(c + 1);
    }
    return "?";
  };
  std::ostringstream os;
  os << "e-hat units from the matrix units (e^a = i e-hat^a, e^0 = "
     << (u.e[0] == Matrix4C::Identity() ? "I" : "?") << ")\n";
  os << "  row * col |" << std::setw(5) << "e1" << std::setw(5) << "e2" << std::setw(5) << "e3" << '\n';
  for (std::size_t a = 0; a < 3; ++a) {
    os << "  " << std::setw(9) << ("e" + std::to_string(a + 1)) << " |";
    for (std::size_t b = 0; b < 3; ++b) os << std::setw(5) << name(e[a] * e[b]);
    os << '\n';
  }
  os << "  e1 e2 e3 = " << name(e[0] * e[1] * e[2]) << '\n';
  return os.str();
}

std::string rest_frame() {
  const TrinomialBasis b = canonical_basis();
  std::ostringstream os;
  os << std::setprecision(12);
  for (Real m : {0.5, 1.0, 2.5}) {
    const DiracSpinor u = plane_wave_spinor(FourVectorR(m, 0, 0, 0), m, Eigen::Vector2cd(1.0, 0.0));
    const KVector k = k_vector(u, b);
    const FourVectorR mk{m * k.re};
    os << "m = " << m << "  m Re K = (" << mk(0) << ", " << mk(1) << ", " << mk(2) << ", " << mk(3) << ")"
       << "  |Im K| = " << max_abs(k.im) << '\n';
  }
  return os.str();
}

std::string loop_phase() {
  const TrinomialBasis b = canonical_basis();
  const Real m = 1.0, e = 0.5;
  const FourVectorR A0(0.2, 0.1, -0.3, 0.05);
  const FourVectorR p(std::sqrt(1.0 + 0.09 + 0.04 + 0.25), 0.3, -0.2, 0.5);
  const SpinorField psi = gauged_plane_wave(p, m, Eigen::Vector2cd(1.0, 0.5), A0, e);
  const GaugeField a = constant_gauge_field(A0, e);
  std::ostringstream os;
  os << std::setprecision(6);
  os << "plane wave, m = 1, constant A, square loop in the (t, x) plane with side 1\n";
  for (int nodes : {1, 4, 16, 64}) {
    const LineIntegral li = line_integral(square_loop(FourVectorR{}, 0, 1, 1.0), a, k_field(psi, b), m, nodes);
    os << "  nodes/edge " << std::setw(3) << nodes << "  phase " << std::setw(12) << li.phase << "  log scale "
       << std::setw(12) << li.log_scale << '\n';
  }
  const SpinorField rest = gauged_plane_wave(FourVectorR(m, 0, 0, 0), m, Eigen::Vector2cd(1.0, 0.0), FourVectorR{}, 0);
  const LineIntegral seg = line_integral({{FourVectorR{}, FourVectorR(3.0, 0, 0, 0)}, false}, GaugeField{},
                                         k_field(rest, b), m, 64);
  os << "rest frame, open segment t = 0..3: phase " << seg.phase << " (-m T = " << -3.0 * m << ")\n";
  return os.str();
}

}  // namespace

std::vector<std::string> demo_names() { return {"eq29_slots", "e_units_table", "rest_frame_K", "loop_phase"}; }

std::string demo(std::string_view name) {
  if (name == "eq29_slots") return slots();
  if (name == "e_units_table") return units_table();
  if (name == "rest_frame_K") return rest_frame();
  if (name == "loop_phase") return loop_phase();
  throw std::invalid_argument("unknown demo: " + std::string(name));
}

}  // namespace bqdirac
