#include "tenwein/nodal.hpp"

#include <sstream>

namespace tenwein {

NodalConstellation::NodalConstellation(int n, std::vector<Constellation> per_color)
    : n_(n), per_color_(std::move(per_color)) {
  require(!per_color_.empty(), "at least one color required");
  for (const auto& c : per_color_) require(c.degree() == n, "degree mismatch");
}

int NodalConstellation::num_components() const {
  std::vector<Permutation> all;
  for (const auto& c : per_color_)
    all.insert(all.end(), c.perms().begin(), c.perms().end());
  return transitivity_partition(all, n_).num_blocks();
}

int NodalConstellation::arithmetic_genus() const {
  int total = 0;
  for (const auto& c : per_color_)
    total += c.genus() - c.orbit_partition().num_blocks();
  return total + n_ * (colors() - 1) + num_components();
}

NodalConstellation nodal_from_pair(const PermTuple& sigma, const PermTuple& tau) {
  require(sigma.colors() == tau.colors() && sigma.degree() == tau.degree(),
          "shape mismatch");
  std::vector<Constellation> maps;
  for (int c = 0; c < sigma.colors(); ++c)
    maps.emplace_back(sigma.degree(),
                      std::vector<Permutation>{sigma.color(c), tau.color(c).inverse()});
  return NodalConstellation(sigma.degree(), std::move(maps));
}

int arithmetic_genus(const PermTuple& sigma, const PermTuple& tau) {
  return nodal_from_pair(sigma, tau).arithmetic_genus();
}

int arithmetic_genus_joint(const PermTuple& sigma, const PermTuple& tau,
                           const std::vector<Constellation>& etas) {
  const int n = sigma.degree();
  const int D = sigma.colors();
  require(static_cast<int>(etas.size()) == D, "one constellation per color required");
  PermTuple nu = product_with_inverse(sigma, tau);

  // irreducible components and genera of the bipartite maps and of the etas;
  // each color also contributes #(nu_c) face-pairing nodes
  int total = 0;
  int pairing_nodes = 0;
  std::vector<Permutation> everything;
  for (int c = 0; c < D; ++c) {
    require(etas[static_cast<size_t>(c)].degree() == n, "degree mismatch");
    require(etas[static_cast<size_t>(c)].product() == nu.color(c),
            "eta^c must multiply to sigma_c tau_c^{-1}");
    Constellation bip(n, {sigma.color(c), tau.color(c).inverse()});
    total += bip.genus() - bip.orbit_partition().num_blocks();
    total += etas[static_cast<size_t>(c)].genus() -
             etas[static_cast<size_t>(c)].orbit_partition().num_blocks();
    pairing_nodes += nu.color(c).num_cycles();
    everything.push_back(sigma.color(c));
    everything.push_back(tau.color(c));
    for (const auto& p : etas[static_cast<size_t>(c)].perms()) everything.push_back(p);
  }
  const int components = transitivity_partition(everything, n).num_blocks();
  return total + n * (D - 1) + pairing_nodes + components;
}

void for_each_joint_factorization(
    const PermTuple& sigma, const PermTuple& tau, long l, std::optional<long> k,
    const std::function<void(const std::vector<Constellation>&)>& fn) {
  const int D = sigma.colors();
  PermTuple nu = product_with_inverse(sigma, tau);
  SetPartition Pist = joint_orbits(sigma, tau);

  std::vector<Constellation> chosen;
  std::function<void(int, long, long)> rec = [&](int c, long lrem, long krem) {
    if (c == D) {
      if (lrem != 0) return;
      if (k && krem != 0) return;
      SetPartition joined = Pist;
      for (const auto& eta : chosen) joined = joined.join(eta.orbit_partition());
      if (joined.num_blocks() != 1) return;
      fn(chosen);
      return;
    }
    for (long lc = 0; lc <= lrem; ++lc) {
      // k_c = 0 (empty factorization, forces sigma_c = tau_c) only at l_c = 0
      long kmax = k ? std::min(krem, lc) : lc;
      for (long kc = (lc == 0 ? 0 : 1); kc <= kmax; ++kc) {
        FactorizationFilter filter;
        filter.proper = true;
        filter.total_length = lc;
        for_each_factorization(nu.color(c), static_cast<int>(kc), filter,
                               [&](const Constellation& eta) {
                                 chosen.push_back(eta);
                                 rec(c + 1, lrem - lc, krem - kc);
                                 chosen.pop_back();
                               });
      }
    }
  };
  rec(0, l, k.value_or(0));
}

long covering_arithmetic_genus(const HurwitzQuery& q, long l) {
  q.validate();
  const int n = q.n();
  const int D = q.colors();
  long parts_sum = 0;
  for (int c = 0; c < D; ++c)
    parts_sum += q.alphas[static_cast<size_t>(c)].num_parts() +
                 q.betas[static_cast<size_t>(c)].num_parts();
  long twice_h = l - parts_sum + 2 + 2L * n * (D - 1);
  require(twice_h >= 0 && twice_h % 2 == 0,
          "l is inconsistent with a non-negative integer arithmetic genus");
  return twice_h / 2;
}

Rat covering_count(const HurwitzQuery& q, long k, long l, bool restricted_monotone) {
  q.validate();
  for (int c = 0; c < q.colors(); ++c) {
    require(!q.alphas[static_cast<size_t>(c)].is_trivial() &&
                !q.betas[static_cast<size_t>(c)].is_trivial(),
            "covering counts require non-trivial ramification profiles");
  }
  covering_arithmetic_genus(q, l);  // validates the (l, H) relation
  Int labeled = restricted_monotone ? higher_order_hurwitz(q, l) : bms_number(q, l, k);
  Rat r(labeled, factorial(q.n()));
  r.canonicalize();
  return r;
}

Int singular_point_count(const HurwitzQuery& q, long k, long l) {
  q.validate();
  long parts_sum = 0;
  for (int c = 0; c < q.colors(); ++c)
    parts_sum += q.alphas[static_cast<size_t>(c)].num_parts() +
                 q.betas[static_cast<size_t>(c)].num_parts();
  return Int(q.n()) * k - l + parts_sum;
}

Int folding_decomposition(const PermTuple& sigma, const PermTuple& tau, long l) {
  require(l >= 0, "l must be >= 0");
  const int D = sigma.colors();
  const long lmin = ell(sigma, tau);
  if (l < lmin || (l - lmin) % 2 != 0) return 0;
  const long half = (l - lmin) / 2;
  const int base_genus = arithmetic_genus(sigma, tau);

  PermTuple nu = product_with_inverse(sigma, tau);
  SetPartition Pist = joint_orbits(sigma, tau);
  std::vector<SetPartition> Pinu;
  std::vector<std::vector<SetPartition>> coarser;
  for (int c = 0; c < D; ++c) {
    Pinu.push_back(cycle_partition(nu.color(c)));
    coarser.push_back(coarser_partitions(Pinu.back()));
  }

  Rat total(0);
  std::vector<const SetPartition*> chosen(static_cast<size_t>(D), nullptr);
  // sum over arithmetic genus of the folding, then over connected foldings of
  // that genus; the folding genus is base_genus + excess of the incidence graph
  for (long G = base_genus; G <= base_genus + half; ++G) {
    const long L = G - base_genus;
    const long gtot = half - L;

    std::function<void(int, const SetPartition&)> rec = [&](int c, const SetPartition& joined) {
      if (c == D) {
        if (joined.num_blocks() != 1) return;
        long excess = 1 - Pist.num_blocks();
        for (int cc = 0; cc < D; ++cc)
          excess += Pinu[static_cast<size_t>(cc)].num_blocks() -
                    chosen[static_cast<size_t>(cc)]->num_blocks();
        if (excess != L) return;
        // genus assignments to the colored nodes, weighted by single Hurwitz
        // numbers per node
        std::vector<std::vector<Rat>> weights;
        for (int cc = 0; cc < D; ++cc) {
          for (const auto& B : chosen[static_cast<size_t>(cc)]->blocks()) {
            const CycleType t = nu.color(cc).restricted_to(B).cycle_type();
            const Rat cls(t.class_size());
            std::vector<Rat> w;
            for (long g = 0; g <= gtot; ++g) w.emplace_back(Rat(single_hurwitz(t, g)) / cls);
            weights.push_back(std::move(w));
          }
        }
        std::vector<Rat> acc(static_cast<size_t>(gtot + 1), Rat(0));
        acc[0] = 1;
        for (const auto& w : weights) {
          std::vector<Rat> next(static_cast<size_t>(gtot + 1), Rat(0));
          for (long a = 0; a <= gtot; ++a) {
            if (acc[static_cast<size_t>(a)] == 0) continue;
            for (long b = 0; a + b <= gtot; ++b)
              next[static_cast<size_t>(a + b)] +=
                  acc[static_cast<size_t>(a)] * w[static_cast<size_t>(b)];
          }
          acc = std::move(next);
        }
        total += acc[static_cast<size_t>(gtot)];
        return;
      }
      for (const auto& pi : coarser[static_cast<size_t>(c)]) {
        chosen[static_cast<size_t>(c)] = &pi;
        rec(c + 1, joined.join(pi));
      }
    };
    rec(0, Pist);
  }

  check_invariant(total.get_den() == 1, "folding sum must be integral");
  check_invariant(total >= 0, "p_C must be non-negative");
  return total.get_num();
}

std::string incidence_graph_dot(const SetPartition& Pi, const std::vector<SetPartition>& pis,
                                const std::vector<SetPartition>& Pics) {
  IncidenceGraph g = incidence_graph(Pi, pis, Pics);
  std::ostringstream os;
  os << "graph incidence {\n";
  for (int w = 0; w < g.white_vertices; ++w)
    os << "  w" << w << " [shape=circle, color=black, label=\"W" << w << "\"];\n";
  int offset = 0;
  for (size_t c = 0; c < pis.size(); ++c) {
    for (int b = 0; b < pis[c].num_blocks(); ++b)
      os << "  c" << offset + b << " [shape=circle, color=" << (c + 1)
         << ", colorscheme=set19, label=\"B" << c + 1 << "." << b << "\"];\n";
    offset += pis[c].num_blocks();
  }
  for (const auto& e : g.edges)
    os << "  w" << e.white << " -- c" << e.colored << " [color=" << (e.color + 1)
       << ", colorscheme=set19];\n";
  os << "}\n";
  return os.str();
}

std::string nodal_schematic_dot(const PermTuple& sigma, const PermTuple& tau,
                                const std::vector<SetPartition>* folding) {
  const int n = sigma.degree();
  const int D = sigma.colors();
  PermTuple nu = product_with_inverse(sigma, tau);
  std::ostringstream os;
  os << "graph nodal {\n";
  for (int s = 1; s <= n; ++s)
    os << "  node" << s << " [shape=triangle, label=\"" << s << "\"];\n";
  for (int c = 0; c < D; ++c) {
    for (int s = 1; s <= n; ++s) {
      os << "  w_c" << c + 1 << "_" << s << " [shape=circle, label=\"[" << s << "]\"];\n";
      os << "  node" << s << " -- w_c" << c + 1 << "_" << s << " [style=dashed];\n";
    }
    const Permutation flavored[2] = {sigma.color(c), tau.color(c).inverse()};
    for (int f = 0; f < 2; ++f) {
      auto cycles = flavored[f].cycles();
      for (size_t cy = 0; cy < cycles.size(); ++cy) {
        std::string name = "v_c" + std::to_string(c + 1) + "_f" + std::to_string(f + 1) + "_" +
                           std::to_string(cy);
        os << "  " << name << " [shape=circle, style=filled, color=" << (f == 0 ? 2 : 3)
           << ", colorscheme=set19, label=\"" << (f + 1) << "\"];\n";
        for (int s : cycles[cy])
          os << "  " << name << " -- w_c" << c + 1 << "_" << s << ";\n";
      }
    }
    if (folding) {
      require(static_cast<int>(folding->size()) == D, "one folding partition per color");
      const SetPartition& pc = (*folding)[static_cast<size_t>(c)];
      require(cycle_partition(nu.color(c)).refines(pc),
              "folding partition must be coarser than the cycles of nu_c");
      for (int b = 0; b < pc.num_blocks(); ++b) {
        std::string name = "star_c" + std::to_string(c + 1) + "_" + std::to_string(b);
        os << "  " << name << " [shape=star, color=" << c + 1 << ", colorscheme=set19];\n";
        // attach the star to the faces (cycles of nu_c) inside its block,
        // each face identified by its smallest element
        for (const auto& cyc : nu.color(c).cycles()) {
          if (pc.block_index_of(cyc.front()) == b)
            os << "  " << name << " -- w_c" << c + 1 << "_" << cyc.front()
               << " [style=dotted];\n";
        }
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace tenwein
