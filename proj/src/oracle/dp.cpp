#include "xisf/oracle/dp.hpp"

#include <cmath>
#include <stdexcept>

namespace xisf::oracle {

QTable zero_q(const TabularModel& m) {
  return QTable(m.num_states, Vec(m.num_actions, 0.0));
}

XiTable zero_xi(const TabularModel& m) {
  return XiTable(m.num_states,
                 std::vector<Vec>(m.num_actions, Vec(m.num_atoms, 0.0)));
}

QTable value_iteration(const TabularModel& m, const Vec& reward_per_atom,
                       double tol, int max_sweeps) {
  QTable q = zero_q(m);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double residual = 0.0;
    QTable next = q;
    for (int s = 0; s < m.num_states; ++s) {
      for (int a = 0; a < m.num_actions; ++a) {
        double v = 0.0;
        for (int t = 0; t < m.num_states; ++t) {
          const double p = m.kernel[s][a][t];
          if (p == 0.0) continue;
          double cont = 0.0;
          if (!m.is_terminal(t)) {
            cont = q[t][0];
            for (int b = 1; b < m.num_actions; ++b)
              cont = std::max(cont, q[t][b]);
          }
          v += p * (reward_per_atom[m.feature_map[s][a][t]] +
                    m.gamma * cont);
        }
        next[s][a] = v;
        residual = std::max(residual, std::abs(v - q[s][a]));
      }
    }
    q = std::move(next);
    if (residual <= tol) return q;
  }
  throw std::runtime_error("value_iteration: did not converge");
}

std::vector<int> greedy_policy(const QTable& q) {
  std::vector<int> pi(q.size());
  for (std::size_t s = 0; s < q.size(); ++s) pi[s] = argmax_tiebreak(q[s]);
  return pi;
}

namespace {

// Solve A x = b by Gaussian elimination with partial pivoting.
Vec solve_linear(std::vector<Vec> a, Vec b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    if (std::abs(a[col][col]) < 1e-14)
      throw std::runtime_error("solve_linear: singular system");
    for (int r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  Vec x(n);
  for (int r = n - 1; r >= 0; --r) {
    double v = b[r];
    for (int c = r + 1; c < n; ++c) v -= a[r][c] * x[c];
    x[r] = v / a[r][r];
  }
  return x;
}

}  // namespace

QTable policy_q(const TabularModel& m, const Vec& reward_per_atom,
                const std::vector<int>& policy) {
  // (I - gamma P_pi) v = r_pi on states, then one backup for Q.
  const int n = m.num_states;
  std::vector<Vec> a(n, Vec(n, 0.0));
  Vec b(n, 0.0);
  for (int s = 0; s < n; ++s) {
    a[s][s] = 1.0;
    if (m.is_terminal(s)) continue;  // v(terminal) = 0
    const int act = policy[s];
    b[s] = m.expected_reward(s, act, reward_per_atom);
    for (int t = 0; t < n; ++t)
      if (!m.is_terminal(t)) a[s][t] -= m.gamma * m.kernel[s][act][t];
  }
  // Terminal states: v = 0 exactly.
  for (int s = 0; s < n; ++s)
    if (m.is_terminal(s)) b[s] = 0.0;
  const Vec v = solve_linear(std::move(a), std::move(b));

  QTable q = zero_q(m);
  for (int s = 0; s < n; ++s)
    for (int act = 0; act < m.num_actions; ++act) {
      double val = m.expected_reward(s, act, reward_per_atom);
      for (int t = 0; t < n; ++t)
        if (!m.is_terminal(t)) val += m.gamma * m.kernel[s][act][t] * v[t];
      q[s][act] = val;
    }
  return q;
}

XiTable xi_backup(const TabularModel& m, const XiTable& xi,
                  const Vec& reward_per_atom, const std::vector<int>* policy,
                  const std::vector<Vec>* feature_probs) {
  XiTable next = zero_xi(m);
  // Next action per state: fixed policy or greedy on induced Q.
  std::vector<int> abar(m.num_states, 0);
  for (int t = 0; t < m.num_states; ++t) {
    if (policy) {
      abar[t] = (*policy)[t];
    } else {
      Vec q(m.num_actions, 0.0);
      for (int b = 0; b < m.num_actions; ++b)
        q[b] = dot(xi[t][b], reward_per_atom);
      abar[t] = argmax_tiebreak(q);
    }
  }
  for (int s = 0; s < m.num_states; ++s) {
    for (int a = 0; a < m.num_actions; ++a) {
      Vec& out = next[s][a];
      if (feature_probs) {
        out = (*feature_probs)[s * m.num_actions + a];
      } else {
        for (int t = 0; t < m.num_states; ++t)
          out[m.feature_map[s][a][t]] += m.kernel[s][a][t];
      }
      for (int t = 0; t < m.num_states; ++t) {
        const double p = m.kernel[s][a][t];
        if (p == 0.0 || m.is_terminal(t)) continue;
        const Vec& tail = xi[t][abar[t]];
        const double w = m.gamma * p;
        for (int j = 0; j < m.num_atoms; ++j) out[j] += w * tail[j];
      }
    }
  }
  return next;
}

XiTable xi_iteration(const TabularModel& m, const Vec& reward_per_atom,
                     const std::vector<int>* policy, double tol,
                     int max_sweeps, const std::vector<Vec>* feature_probs,
                     const XiTable* init) {
  XiTable xi = init ? *init : zero_xi(m);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    XiTable next = xi_backup(m, xi, reward_per_atom, policy, feature_probs);
    double residual = 0.0;
    for (int s = 0; s < m.num_states; ++s)
      for (int a = 0; a < m.num_actions; ++a)
        for (int j = 0; j < m.num_atoms; ++j)
          residual =
              std::max(residual, std::abs(next[s][a][j] - xi[s][a][j]));
    xi = std::move(next);
    if (residual <= tol) return xi;
  }
  throw std::runtime_error("xi_iteration: did not converge");
}

QTable q_from_xi_table(const XiTable& xi, const Vec& reward_per_atom) {
  QTable q(xi.size());
  for (std::size_t s = 0; s < xi.size(); ++s) {
    q[s].resize(xi[s].size());
    for (std::size_t a = 0; a < xi[s].size(); ++a)
      q[s][a] = dot(xi[s][a], reward_per_atom);
  }
  return q;
}

PsiTable psi_iteration(const TabularModel& m, const DiscreteFeatureSet& atoms,
                       const Vec& w, double tol, int max_sweeps) {
  const int n_feat = atoms.atoms.empty() ? 0 : atoms.atoms[0].dim();
  PsiTable psi(m.num_states,
               std::vector<Vec>(m.num_actions, Vec(n_feat, 0.0)));
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    std::vector<int> abar(m.num_states, 0);
    for (int t = 0; t < m.num_states; ++t) {
      Vec q(m.num_actions, 0.0);
      for (int b = 0; b < m.num_actions; ++b) q[b] = dot(psi[t][b], w);
      abar[t] = argmax_tiebreak(q);
    }
    PsiTable next(m.num_states,
                  std::vector<Vec>(m.num_actions, Vec(n_feat, 0.0)));
    double residual = 0.0;
    for (int s = 0; s < m.num_states; ++s) {
      for (int a = 0; a < m.num_actions; ++a) {
        Vec& out = next[s][a];
        for (int t = 0; t < m.num_states; ++t) {
          const double p = m.kernel[s][a][t];
          if (p == 0.0) continue;
          const Vec& phi = atoms.atoms[m.feature_map[s][a][t]].values;
          for (int k = 0; k < n_feat; ++k) out[k] += p * phi[k];
          if (m.is_terminal(t)) continue;
          const Vec& tail = psi[t][abar[t]];
          const double g = m.gamma * p;
          for (int k = 0; k < n_feat; ++k) out[k] += g * tail[k];
        }
        for (int k = 0; k < n_feat; ++k)
          residual =
              std::max(residual, std::abs(out[k] - psi[s][a][k]));
      }
    }
    psi = std::move(next);
    if (residual <= tol) return psi;
  }
  throw std::runtime_error("psi_iteration: did not converge");
}

QTable q_from_psi_table(const PsiTable& psi, const Vec& w) {
  QTable q(psi.size());
  for (std::size_t s = 0; s < psi.size(); ++s) {
    q[s].resize(psi[s].size());
    for (std::size_t a = 0; a < psi[s].size(); ++a)
      q[s][a] = dot(psi[s][a], w);
  }
  return q;
}

double max_abs_diff(const QTable& a, const QTable& b) {
  double d = 0.0;
  for (std::size_t s = 0; s < a.size(); ++s)
    for (std::size_t act = 0; act < a[s].size(); ++act)
      d = std::max(d, std::abs(a[s][act] - b[s][act]));
  return d;
}

}  // namespace xisf::oracle
