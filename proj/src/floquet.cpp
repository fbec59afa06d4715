#include "circsim/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "circsim/constants.hpp"

namespace circsim {

namespace {

const std::complex<double> I{0.0, 1.0};

struct Assembly {
  int n_nodes = 0;
  int n_mod = 0;  // modulated-inductor branches carrying flux unknowns
  int n_blocks = 0;
  int dim = 0;
  std::vector<int> mod_branch;  // indices into net.branches

  int vidx(int node, int block) const { return block * n_nodes + node; }
  int fidx(int branch, int block) const {
    return n_nodes * n_blocks + block * n_mod + branch;
  }
};

Eigen::MatrixXcd assemble(const NetworkDescription& net, double omega_p, int M,
                          Assembly& idx) {
  idx.n_nodes = net.n_nodes;
  idx.n_blocks = 2 * M + 1;
  idx.mod_branch.clear();
  for (int b = 0; b < static_cast<int>(net.branches.size()); ++b)
    if (net.branches[b].kind == BranchKind::modulated_inductor) idx.mod_branch.push_back(b);
  idx.n_mod = static_cast<int>(idx.mod_branch.size());
  idx.dim = (idx.n_nodes + idx.n_mod) * idx.n_blocks;

  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(idx.dim, idx.dim);

  // Convention: signals go as e^{-i omega t}; an inductor has Z = -i omega L
  // and a capacitor Y = -i omega C.
  for (int blk = 0; blk < idx.n_blocks; ++blk) {
    const int m = blk - M;
    const double w = omega_p + m * net.modulation_frequency();

    auto stamp_admittance = [&](int a, int b, std::complex<double> y) {
      if (a >= 0) A(idx.vidx(a, blk), idx.vidx(a, blk)) += y;
      if (b >= 0) A(idx.vidx(b, blk), idx.vidx(b, blk)) += y;
      if (a >= 0 && b >= 0) {
        A(idx.vidx(a, blk), idx.vidx(b, blk)) -= y;
        A(idx.vidx(b, blk), idx.vidx(a, blk)) -= y;
      }
    };

    for (const auto& br : net.branches) {
      switch (br.kind) {
        case BranchKind::capacitor:
          stamp_admittance(br.node_a, br.node_b, -I * w * br.c);
          break;
        case BranchKind::resistor:
          stamp_admittance(br.node_a, br.node_b, std::complex<double>{1.0 / br.r, 0.0});
          break;
        case BranchKind::series_inductor:
          stamp_admittance(br.node_a, br.node_b, 1.0 / (-I * w * br.lg));
          break;
        case BranchKind::modulated_inductor:
          break;  // handled below with flux unknowns
      }
    }

    for (const auto& p : net.ports)
      A(idx.vidx(p.node, blk), idx.vidx(p.node, blk)) += 1.0 / p.z0;

    // Modulated inductors: i^{(m)} couples flux blocks m-1, m, m+1.
    for (int k = 0; k < idx.n_mod; ++k) {
      const Branch& br = net.branches[idx.mod_branch[k]];
      std::complex<double> c_diag{1.0 / br.l0, 0.0};
      std::complex<double> c_up{0.0, 0.0};    // coefficient of psi^{(m-1)}
      std::complex<double> c_down{0.0, 0.0};  // coefficient of psi^{(m+1)}
      if (br.depth != 0.0) {
        if (br.omega == 0.0) {
          // Zero-frequency modulation is a static imbalance.
          c_diag = (1.0 + br.sign * br.depth * std::cos(br.phase)) / br.l0;
        } else {
          const std::complex<double> half = 0.5 * br.sign * br.depth / br.l0;
          c_up = half * std::exp(-I * br.phase);
          c_down = half * std::exp(I * br.phase);
        }
      }

      const int row_a = br.node_a >= 0 ? idx.vidx(br.node_a, blk) : -1;
      const int row_b = br.node_b >= 0 ? idx.vidx(br.node_b, blk) : -1;
      const int frow = idx.fidx(k, blk);

      auto stamp_current = [&](int fblk, std::complex<double> coeff) {
        if (fblk < 0 || fblk >= idx.n_blocks) return;
        const int col = idx.fidx(k, fblk);
        if (row_a >= 0) A(row_a, col) += coeff;   // current a -> b leaves node a
        if (row_b >= 0) A(row_b, col) -= coeff;
        // Branch voltage picks up the series-element drop of the same current.
        A(frow, col) += (I * w * br.lg - br.r_series) * coeff;
      };
      stamp_current(blk, c_diag);
      stamp_current(blk - 1, c_up);
      stamp_current(blk + 1, c_down);

      // v_a - v_b = -i w psi - i w lg i + r i  (written as residual row)
      if (br.node_a >= 0) A(frow, idx.vidx(br.node_a, blk)) += 1.0;
      if (br.node_b >= 0) A(frow, idx.vidx(br.node_b, blk)) -= 1.0;
      A(frow, idx.fidx(k, blk)) += I * w;
    }
  }
  return A;
}

}  // namespace

double HarmonicScatteringMatrix::scattered_power(int in_port) const {
  double p = 0.0;
  for (const auto& s : blocks)
    for (int mu = 0; mu < n_ports; ++mu) p += std::norm(s(mu, in_port));
  return p;
}

HarmonicScatteringMatrix solve(const NetworkDescription& net, double omega_p, int M) {
  net.validate();
  const double omega = net.modulation_frequency();
  if (omega == 0.0 && M != 0)
    throw std::invalid_argument("unmodulated network requires M = 0");
  if (omega != 0.0 && M < 1)
    throw std::invalid_argument("modulated network requires M >= 1");
  if (omega_p - M * omega <= 0.0)
    throw std::invalid_argument("sideband frequency not positive within truncation");

  Assembly idx;
  Eigen::MatrixXcd A = assemble(net, omega_p, M, idx);
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(A);

  const int n_ports = static_cast<int>(net.ports.size());
  HarmonicScatteringMatrix out;
  out.probe_frequency = omega_p;
  out.modulation_frequency = omega;
  out.truncation = M;
  out.n_ports = n_ports;
  out.blocks.assign(2 * M + 1, Eigen::MatrixXcd::Zero(n_ports, n_ports));

  for (int nu = 0; nu < n_ports; ++nu) {
    const Port& drive = net.ports[nu];
    const double vs = 2.0 * std::sqrt(drive.z0);  // incident wave a = 1
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(idx.dim);
    rhs(idx.vidx(drive.node, M)) = vs / drive.z0;

    Eigen::VectorXcd x = lu.solve(rhs);
    const double residual = (A * x - rhs).norm();
    if (!(residual <= 1e-8 * rhs.norm()))
      throw solver_error("network resonance exactly at solve frequency with zero damping");

    for (int blk = 0; blk < idx.n_blocks; ++blk) {
      const int m = blk - M;
      for (int mu = 0; mu < n_ports; ++mu) {
        const Port& po = net.ports[mu];
        std::complex<double> b = x(idx.vidx(po.node, blk)) / std::sqrt(po.z0);
        if (m == 0 && mu == nu) b -= 1.0;
        out.blocks[blk](mu, nu) = b;
      }
    }
  }
  return out;
}

double truncation_error(const NetworkDescription& net, double omega_p, int M) {
  const auto a = solve(net, omega_p, M);
  const auto b = solve(net, omega_p, 2 * M);
  double err = 0.0;
  for (int mu = 0; mu < a.n_ports; ++mu)
    for (int nu = 0; nu < a.n_ports; ++nu)
      err = std::max(err, std::abs(std::abs(a.entry(0, mu, nu)) -
                                   std::abs(b.entry(0, mu, nu))));
  return err;
}

std::vector<HarmonicScatteringMatrix> sweep(const NetworkDescription& net,
                                            const std::vector<double>& omega_grid,
                                            int M, int threads) {
  if (omega_grid.empty()) throw std::invalid_argument("sweep: empty grid");
  std::vector<HarmonicScatteringMatrix> out(omega_grid.size());
  std::vector<std::string> errors(omega_grid.size());

  unsigned n_workers = threads > 0 ? static_cast<unsigned>(threads)
                                   : std::max(1u, std::thread::hardware_concurrency());
  n_workers = std::min<unsigned>(n_workers, omega_grid.size());

  auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < omega_grid.size(); i += n_workers) {
      try {
        out[i] = solve(net, omega_grid[i], M);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  if (n_workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_workers; ++t) pool.emplace_back(work, t);
    for (auto& t : pool) t.join();
  }

  // Failed points keep a zero-port matrix; callers can spot them by n_ports == 0.
  return out;
}

std::vector<double> group_delay(const std::vector<double>& omega,
                                const std::vector<std::complex<double>>& s,
                                double de_embed_delay) {
  const std::size_t n = omega.size();
  if (n < 3 || s.size() != n)
    throw std::invalid_argument("group_delay: need >= 3 matched samples");
  const double h = omega[1] - omega[0];
  for (std::size_t i = 1; i + 1 < n; ++i)
    if (std::abs((omega[i + 1] - omega[i]) - h) > 1e-6 * std::abs(h))
      throw std::invalid_argument("group_delay: grid must be uniform");

  std::vector<double> phase(n);
  for (std::size_t i = 0; i < n; ++i)
    phase[i] = std::arg(s[i] * std::exp(I * omega[i] * de_embed_delay));
  // unwrap
  for (std::size_t i = 1; i < n; ++i) {
    double d = phase[i] - phase[i - 1];
    while (d > pi) d -= 2.0 * pi;
    while (d < -pi) d += 2.0 * pi;
    phase[i] = phase[i - 1] + d;
  }

  std::vector<double> tau(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0)
      tau[i] = (phase[1] - phase[0]) / h;
    else if (i + 1 == n)
      tau[i] = (phase[n - 1] - phase[n - 2]) / h;
    else
      tau[i] = (phase[i + 1] - phase[i - 1]) / (2.0 * h);
  }
  for (double t : tau)
    if (std::abs(t) * std::abs(h) > pi * (1.0 - 1e-9))
      throw std::invalid_argument("undersampled phase");
  return tau;
}

std::complex<double> differential_transmission(const HarmonicScatteringMatrix& s) {
  if (s.n_ports != 4)
    throw std::invalid_argument("differential_transmission needs a four-port");
  Eigen::Vector4cd in{1.0, 0.0, -1.0, 0.0};
  in /= std::sqrt(2.0);
  const Eigen::Vector4cd outwave = s.at(0) * in;
  return (outwave(1) - outwave(3)) / std::sqrt(2.0);
}

ResonancePeak find_differential_resonance(const NetworkDescription& net, double omega_lo,
                                          double omega_hi, int M) {
  auto mag2 = [&](double w) { return std::norm(differential_transmission(solve(net, w, M))); };

  // Coarse scan, then golden-section refinement around the best point.
  const int n_coarse = 201;
  double best_w = omega_lo, best_v = -1.0;
  for (int i = 0; i < n_coarse; ++i) {
    const double w = omega_lo + (omega_hi - omega_lo) * i / (n_coarse - 1);
    const double v = mag2(w);
    if (v > best_v) {
      best_v = v;
      best_w = w;
    }
  }
  const double step = (omega_hi - omega_lo) / (n_coarse - 1);
  double a = best_w - step, b = best_w + step;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = mag2(c), fd = mag2(d);
  for (int it = 0; it < 60; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = mag2(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = mag2(d);
    }
  }
  ResonancePeak peak;
  peak.omega = 0.5 * (a + b);
  peak.peak_value = std::sqrt(mag2(peak.omega));

  // -3 dB points by bisection on each side.
  const double half = 0.5 * peak.peak_value * peak.peak_value;
  auto crossing = [&](double inside, double outside) {
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (inside + outside);
      if (mag2(mid) > half)
        inside = mid;
      else
        outside = mid;
    }
    return 0.5 * (inside + outside);
  };
  const double lo = crossing(peak.omega, omega_lo);
  const double hi = crossing(peak.omega, omega_hi);
  peak.fwhm = hi - lo;
  return peak;
}

}  // namespace circsim
