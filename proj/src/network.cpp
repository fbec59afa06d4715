#include "circsim/network.hpp"

#include <cmath>
#include <stdexcept>

namespace circsim {

Branch Branch::modulated(int a, int b, double l0, double depth, double omega,
                         double phase, int sign, double lg, double rs) {
  Branch br;
  br.kind = BranchKind::modulated_inductor;
  br.node_a = a;
  br.node_b = b;
  br.l0 = l0;
  br.depth = depth;
  br.omega = omega;
  br.phase = phase;
  br.sign = sign;
  br.lg = lg;
  br.r_series = rs;
  return br;
}

Branch Branch::capacitor(int a, int b, double c) {
  Branch br;
  br.kind = BranchKind::capacitor;
  br.node_a = a;
  br.node_b = b;
  br.c = c;
  return br;
}

Branch Branch::resistor(int a, int b, double r) {
  Branch br;
  br.kind = BranchKind::resistor;
  br.node_a = a;
  br.node_b = b;
  br.r = r;
  return br;
}

Branch Branch::inductor(int a, int b, double l) {
  Branch br;
  br.kind = BranchKind::series_inductor;
  br.node_a = a;
  br.node_b = b;
  br.lg = l;
  return br;
}

double NetworkDescription::modulation_frequency() const {
  for (const auto& br : branches)
    if (br.kind == BranchKind::modulated_inductor && br.depth != 0.0) return br.omega;
  return 0.0;
}

void NetworkDescription::validate() const {
  if (n_nodes <= 0) throw std::invalid_argument("network has no nodes");
  auto check_node = [&](int n) {
    if (n < -1 || n >= n_nodes) throw std::invalid_argument("branch endpoint out of range");
  };
  // connectivity over nodes + ground (index n_nodes plays ground)
  std::vector<int> parent(n_nodes + 1);
  for (int i = 0; i <= n_nodes; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  auto id = [&](int n) { return n < 0 ? n_nodes : n; };

  const double omega = modulation_frequency();
  for (const auto& br : branches) {
    check_node(br.node_a);
    check_node(br.node_b);
    if (br.node_a == br.node_b) throw std::invalid_argument("branch shorts a node to itself");
    unite(id(br.node_a), id(br.node_b));
    if (br.kind == BranchKind::modulated_inductor) {
      if (!(br.l0 > 0.0)) throw std::invalid_argument("modulated inductor needs l0 > 0");
      if (std::abs(br.depth) >= 1.0) throw std::invalid_argument("modulation depth out of range");
      if (br.sign != 1 && br.sign != -1) throw std::invalid_argument("branch sign must be +-1");
      if (br.depth != 0.0 && br.omega != omega)
        throw std::invalid_argument("modulated branches must share one frequency");
    }
  }
  for (const auto& p : ports) {
    check_node(p.node);
    if (p.node < 0) throw std::invalid_argument("port node must not be ground");
    if (p.ref_node != -1) throw std::invalid_argument("ports must be referenced to ground");
    if (!(p.z0 > 0.0)) throw std::invalid_argument("port impedance must be positive");
    unite(id(p.node), n_nodes);  // the termination is a path to ground
  }
  for (int n = 0; n < n_nodes; ++n)
    if (find(n) != find(n_nodes)) throw std::invalid_argument("network graph is not connected");
}

namespace {

NetworkDescription build_bridge_ring(const CircuitParams& p, BiasPairing pairing,
                                     const SquidArraySpec* squid,
                                     const FluxControl* flux);

}  // namespace

NetworkDescription build_circulator_network(const CircuitParams& p, BiasPairing pairing) {
  return build_bridge_ring(p, pairing, nullptr, nullptr);
}

NetworkDescription build_flux_driven_network(const FluxControl& fc,
                                             const SquidArraySpec& spec,
                                             const CircuitParams& base,
                                             BiasPairing pairing) {
  fc.validate();
  spec.validate();
  const auto [l0, delta0] = flux_to_bridge_params(fc, spec);
  CircuitParams p = base;
  p.base_inductance = l0;
  // The flux mapping gives the swing of one arm; the ring parametrization
  // counts the pair-to-pair contrast, twice that.
  p.imbalance = 2.0 * delta0;
  p.modulation_frequency = fc.drive_frequency;
  p.drive_phase = fc.drive_phase_offset;
  return build_bridge_ring(p, pairing, &spec, &fc);
}

namespace {

NetworkDescription build_bridge_ring(const CircuitParams& p, BiasPairing pairing,
                                     const SquidArraySpec* squid,
                                     const FluxControl* flux) {
  p.validate();
  // Nodes: ports P1..P4 = 0..3, arm-A internal pair = 4,5, arm-B pair = 6,7.
  constexpr int P1 = 0, P2 = 1, P3 = 2, P4 = 3, XA1 = 4, XA2 = 5, XB1 = 6, XB2 = 7;

  NetworkDescription net;
  net.n_nodes = 8;

  const double depth = 0.5 * p.imbalance;  // per-arm swing; delta0 is the pair contrast
  const double omega = p.modulation_frequency;
  const double phi = p.drive_phase;

  // Bias phases of the four bridges (arm A in/out, arm B in/out).  One bias
  // line pair threads the input bridge of arm A and the output bridge of
  // arm B; the other pair threads arm B's input and arm A's output through
  // the back of its figure-eight (a pi orientation flip).  This crossed
  // routing puts the two conversions of every arm in quadrature at
  // phi = pi/2, which is what lets the network gyrate, and it makes the
  // even-sideband cancellation between the arms exact at every phi.
  double ph_a1 = 0.0, ph_a2 = phi + pi, ph_b1 = phi, ph_b2 = 0.0;
  switch (pairing) {
    case BiasPairing::per_arm:  // {0, 0, phi, phi}: reciprocal, kept for study
      ph_a1 = 0.0;
      ph_a2 = 0.0;
      ph_b1 = phi;
      ph_b2 = phi;
      break;
    case BiasPairing::interleaved:  // {0, phi, 0, phi}: gyrates, leaks sidebands
      ph_a1 = 0.0;
      ph_a2 = phi;
      ph_b1 = 0.0;
      ph_b2 = phi;
      break;
    case BiasPairing::crossed:
      break;
  }

  // One bridge between differential pairs (pa, pb) and (xa, xb): a ring
  // pa -> xa -> pb -> xb -> pa with the opposite arms paired (+, +) / (-, -).
  auto add_bridge = [&](int pa, int pb, int xa, int xb, double phase) {
    auto arm = [&](int a, int b, int sign) {
      Branch br = Branch::modulated(a, b, p.base_inductance, depth, omega, phase, sign,
                                    p.series_inductance, p.parasitic_resistance);
      if (squid) {
        br.n_squids = squid->n_squids;
        br.junction_ic = squid->junction_critical_current;
      }
      if (flux) {
        br.flux_driven = true;
        br.flux_uniform = flux->uniform_flux;
        br.flux_grad = flux->gradiometric_amplitude;
      }
      net.branches.push_back(br);
    };
    arm(pa, xa, +1);
    arm(xa, pb, -1);
    arm(pb, xb, +1);
    arm(xb, pa, -1);
  };

  // Arm A: (P1,P3) -> (XA1,XA2) -> (P2,P4); arm B likewise through XB.
  add_bridge(P1, P3, XA1, XA2, ph_a1);
  add_bridge(P2, P4, XA1, XA2, ph_a2);
  add_bridge(P1, P3, XB1, XB2, ph_b1);
  add_bridge(P2, P4, XB1, XB2, ph_b2);

  net.branches.push_back(Branch::capacitor(XA1, XA2, p.capacitance));
  net.branches.push_back(Branch::capacitor(XB1, XB2, p.capacitance));

  if (p.internal_q > 0.0) {
    // Capacitor dielectric loss as a parallel conductance G = w0 c / Q.
    const double g = resonant_frequency(p) * p.capacitance / p.internal_q;
    net.branches.push_back(Branch::resistor(XA1, XA2, 1.0 / g));
    net.branches.push_back(Branch::resistor(XB1, XB2, 1.0 / g));
  }

  for (int n = P1; n <= P4; ++n) net.ports.push_back(Port{n, -1, p.line_impedance});

  net.validate();
  return net;
}

}  // namespace

NetworkDescription build_static_bridge_network(const CircuitParams& p) {
  CircuitParams st = p;
  st.modulation_frequency = 0.0;
  st.drive_phase = 0.0;
  return build_bridge_ring(st, BiasPairing::per_arm, nullptr, nullptr);
}

NetworkDescription perturb_one_inductor(NetworkDescription net, double epsilon) {
  for (auto& br : net.branches) {
    if (br.kind == BranchKind::modulated_inductor) {
      br.l0 *= (1.0 + epsilon);
      return net;
    }
  }
  throw std::invalid_argument("network has no modulated inductor to perturb");
}

}  // namespace circsim
