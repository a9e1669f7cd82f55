#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/QR>

#include "sublevel/error.hpp"
#include "sublevel/kernels.hpp"
#include "sublevel/sdp.hpp"

namespace sublevel::sdp {

namespace {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

struct Ent {
  int r, c;
  double v;
};

struct Blk {
  int n = 0;
  Mat F0;
  std::vector<std::size_t> vars;
  std::vector<std::size_t> ptr{0};
  std::vector<Ent> ents;
  double maxabs = 0.0;
};

struct Problem {
  std::size_t m = 0;
  std::vector<Blk> blocks;
  Vec c;
  Mat A;
  Vec b;
  std::vector<std::size_t> eq_rows;  // indices into the source equality list kept after reduction
  std::vector<bool> touched;         // variable appears in some block or equality row
  std::string issue;
};

Problem prepare(const BlockSDP& s) {
  s.validate();
  Problem P;
  P.m = s.m;
  P.c = Eigen::Map<const Vec>(s.c.data(), Eigen::Index(s.m));
  P.touched.assign(s.m, false);

  std::vector<std::size_t> first(s.block_sizes.size());
  for (std::size_t b = 0; b < s.block_sizes.size(); ++b) {
    first[b] = P.blocks.size();
    int sz = s.block_sizes[b];
    if (sz > 0) {
      Blk blk;
      blk.n = sz;
      P.blocks.push_back(std::move(blk));
    } else {
      for (int k = 0; k < -sz; ++k) {
        Blk blk;
        blk.n = 1;
        P.blocks.push_back(std::move(blk));
      }
    }
  }
  std::vector<std::map<std::size_t, std::vector<Ent>>> per(P.blocks.size());
  for (auto& blk : P.blocks) blk.F0 = Mat::Zero(blk.n, blk.n);
  for (const auto& e : s.entries) {
    std::size_t bi = first[e.block];
    int r = int(e.i), c = int(e.j);
    if (s.block_sizes[e.block] < 0) {
      bi += e.i;
      r = c = 0;
    }
    Blk& blk = P.blocks[bi];
    blk.maxabs = std::max(blk.maxabs, std::abs(e.v));
    if (e.matno == 0) {
      blk.F0(r, c) += e.v;
      if (r != c) blk.F0(c, r) += e.v;
    } else {
      per[bi][e.matno - 1].push_back({std::min(r, c), std::max(r, c), e.v});
      P.touched[e.matno - 1] = true;
    }
  }
  for (std::size_t bi = 0; bi < P.blocks.size(); ++bi) {
    Blk& blk = P.blocks[bi];
    for (auto& [j, ents] : per[bi]) {
      blk.vars.push_back(j);
      blk.ents.insert(blk.ents.end(), ents.begin(), ents.end());
      blk.ptr.push_back(blk.ents.size());
    }
  }

  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < s.equalities.size(); ++r) {
    if (s.equalities[r].a.empty()) {
      if (std::abs(s.equalities[r].b) > 1e-12) P.issue = "inconsistent equality row 0 = b";
      continue;
    }
    rows.push_back(r);
  }
  if (!rows.empty()) {
    Mat At = Mat::Zero(Eigen::Index(s.m), Eigen::Index(rows.size()));
    for (std::size_t k = 0; k < rows.size(); ++k)
      for (const auto& [j, v] : s.equalities[rows[k]].a) At(Eigen::Index(j), Eigen::Index(k)) += v;
    Eigen::ColPivHouseholderQR<Mat> qr(At);
    qr.setThreshold(1e-10);
    Eigen::Index rank = qr.rank();
    std::vector<std::size_t> keep;
    for (Eigen::Index k = 0; k < rank; ++k) keep.push_back(std::size_t(qr.colsPermutation().indices()(k)));
    std::sort(keep.begin(), keep.end());
    if (std::size_t(rank) < rows.size()) {
      Vec ball(Eigen::Index(rows.size()));
      for (std::size_t k = 0; k < rows.size(); ++k) ball(Eigen::Index(k)) = s.equalities[rows[k]].b;
      Vec y0 = At.transpose().completeOrthogonalDecomposition().solve(ball);
      if ((At.transpose() * y0 - ball).norm() > 1e-8 * (1.0 + ball.norm()))
        P.issue = "inconsistent equality rows";
    }
    P.A =Mat::Zero(Eigen::Index(keep.size()), Eigen::Index(s.m));
    P.b = Vec::Zero(Eigen::Index(keep.size()));
    for (std::size_t k = 0; k < keep.size(); ++k) {
      P.A.row(Eigen::Index(k)) = At.col(Eigen::Index(keep[k])).transpose();
      P.b(Eigen::Index(k)) = s.equalities[rows[keep[k]]].b;
      P.eq_rows.push_back(rows[keep[k]]);
      for (const auto& [j, v] : s.equalities[rows[keep[k]]].a) P.touched[j] = true;
    }
  } else {
    P.A = Mat::Zero(0, Eigen::Index(s.m));
    P.b = Vec::Zero(0);
  }
  return P;
}

// out += sum_j y_j F_j over the block's variables
void add_linear(const Blk& blk, const Vec& y, Mat& out) {
  for (std::size_t a = 0; a < blk.vars.size(); ++a) {
    double yj = y(Eigen::Index(blk.vars[a]));
    if (yj == 0.0) continue;
    for (std::size_t k = blk.ptr[a]; k < blk.ptr[a + 1]; ++k) {
      const Ent& e = blk.ents[k];
      out(e.r, e.c) += yj * e.v;
      if (e.r != e.c) out(e.c, e.r) += yj * e.v;
    }
  }
}

// tr(F_j Y) for the a-th local variable; Y need not be symmetric
double trace_with(const Blk& blk, std::size_t a, const Mat& Y) {
  double s = 0.0;
  for (std::size_t k = blk.ptr[a]; k < blk.ptr[a + 1]; ++k) {
    const Ent& e = blk.ents[k];
    s += e.v * (e.r == e.c ? Y(e.r, e.r) : Y(e.c, e.r) + Y(e.r, e.c));
  }
  return s;
}

double frob(const Mat& a, const Mat& b) {
  return kernels::dot(a.data(), b.data(), std::size_t(a.size()));
}

double max_step(const Mat& P, const Mat& dP) {
  Eigen::LLT<Mat> llt(P);
  if (llt.info() != Eigen::Success) return 0.0;
  Mat W = llt.matrixL().solve(dP);
  W = llt.matrixL().solve(W.transpose()).transpose();
  W = 0.5 * (W + W.transpose());
  double lmin = Eigen::SelfAdjointEigenSolver<Mat>(W, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
  return lmin >= 0.0 ? std::numeric_limits<double>::infinity() : -1.0 / lmin;
}

class Kkt {
 public:
  bool factor(const Mat& M, const Mat& A) {
    K_ = A.rows();
    A_ = &A;
    M_ = &M;
    reg_ = 0.0;
    double scale = std::max(1.0, M.diagonal().cwiseAbs().maxCoeff());
    for (int attempt = 0; attempt < 4; ++attempt) {
      double reg = attempt == 0 ? 0.0 : scale * std::pow(10.0, -14.0 + 2.0 * attempt);
      llt_.compute(M + reg * Mat::Identity(M.rows(), M.cols()));
      if (llt_.info() != Eigen::Success) continue;
      reg_ = reg;
      if (K_ == 0) {
        schur_ = true;
        return true;
      }
      MinvAt_ = llt_.solve(A.transpose());
      Mat E = A * MinvAt_;
      lltE_.compute(E);
      if (lltE_.info() == Eigen::Success) {
        schur_ = true;
        return true;
      }
    }
    schur_ = false;
    Eigen::Index m = M.rows();
    Mat KK = Mat::Zero(m + K_, m + K_);
    KK.topLeftCorner(m, m) = M;
    KK.topRightCorner(m, K_) = A.transpose();
    KK.bottomLeftCorner(K_, m) = A;
    lu_.compute(KK);
    return std::isfinite(lu_.determinant()) && lu_.determinant() != 0.0;
  }

  // M dy - A^T dl = g,  A dy = re; refined against the unregularized M
  void solve(const Vec& g, const Vec& re, Vec& dy, Vec& dl) const {
    solve_once(g, re, dy, dl);
    if (!schur_ || reg_ == 0.0) return;
    Vec cy, cl;
    for (int k = 0; k < 3; ++k) {
      Vec rg = g - (*M_) * dy;
      if (K_) rg += A_->transpose() * dl;
      Vec rr = K_ ? Vec(re - (*A_) * dy) : Vec::Zero(0);
      solve_once(rg, rr, cy, cl);
      dy += cy;
      if (K_) dl += cl;
    }
  }

 private:
  void solve_once(const Vec& g, const Vec& re, Vec& dy, Vec& dl) const {
    if (schur_) {
      Vec Mg = llt_.solve(g);
      if (K_ == 0) {
        dy = Mg;
        dl = Vec::Zero(0);
        return;
      }
      dl = lltE_.solve(re - (*A_) * Mg);
      dy = Mg + MinvAt_ * dl;
      return;
    }
    Eigen::Index m = g.size();
    Vec rhs(m + K_);
    rhs << g, re;
    Vec sol = lu_.solve(rhs);
    dy = sol.head(m);
    dl = -sol.tail(K_);
  }

  Eigen::Index K_ = 0;
  const Mat* A_ = nullptr;
  const Mat* M_ = nullptr;
  double reg_ = 0.0;
  bool schur_ = true;
  Eigen::LLT<Mat> llt_;
  Eigen::LLT<Mat> lltE_;
  Mat MinvAt_;
  Eigen::PartialPivLU<Mat> lu_;
};

double vmax(const Vec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

SolverReport solve(const BlockSDP& sdp, const SolverOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  SolverReport rep;
  Problem P = prepare(sdp);
  const std::size_t m = P.m;
  const std::size_t nb = P.blocks.size();
  const Eigen::Index K = P.A.rows();
  auto finish = [&](SolverReport& r) {
    r.solve_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  };

  for (std::size_t j = 0; j < m; ++j)
    if (!P.touched[j] && P.c(Eigen::Index(j)) != 0.0) {
      rep.status = Status::NumericalFailure;
      rep.message = "unbounded: objective variable " + std::to_string(j + 1) + " appears in no constraint";
      return finish(rep);
    }
  if (!P.issue.empty()) {
    rep.status = Status::Infeasible;
    rep.message = P.issue;
    return finish(rep);
  }

  double cmax = vmax(P.c), bmax = vmax(P.b), f0max = 0.0;
  for (const auto& blk : P.blocks) f0max = std::max(f0max, blk.F0.cwiseAbs().maxCoeff());

  std::size_t N = 0;
  for (const auto& blk : P.blocks) N += std::size_t(blk.n);

  // Starting point: scaled identities, infeasible start.
  double xi = 1.0;
  for (const auto& blk : P.blocks)
    for (std::size_t a = 0; a < blk.vars.size(); ++a) {
      double fn = 0.0;
      for (std::size_t k = blk.ptr[a]; k < blk.ptr[a + 1]; ++k) fn += blk.ents[k].v * blk.ents[k].v;
      xi = std::max(xi, (1.0 + std::abs(P.c(Eigen::Index(blk.vars[a])))) / (1.0 + std::sqrt(fn)));
    }
  std::vector<Mat> S(nb), X(nb), Sinv(nb), Rp(nb), dS(nb), dX(nb), dSa(nb), dXa(nb), Rhs(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    int n = P.blocks[b].n;
    double beta = 1.0 + P.blocks[b].maxabs;
    S[b] = beta * Mat::Identity(n, n);
    X[b] = xi * std::max(1.0, std::sqrt(double(n))) * Mat::Identity(n, n);
  }
  Vec y = Vec::Zero(Eigen::Index(m)), lam = Vec::Zero(K);
  Vec rd(static_cast<Eigen::Index>(m)), re(K), g(static_cast<Eigen::Index>(m)), dy, dl, dya, dla;
  Mat M(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  Mat G;
  Kkt kkt;

  double pobj = 0.0, dobj = 0.0, relgap = 0.0, pinf = 0.0, dinf = 0.0, einf = 0.0;
  int stall = 0;
  // Best iterate meeting the loose tolerances; returned if the run later degrades.
  struct Snapshot {
    double score = std::numeric_limits<double>::infinity();
    Vec y, lam;
    double pobj = 0.0, dobj = 0.0, relgap = 0.0;
    int iter = 0;
  } best;
  Status status = Status::IterLimit;
  std::string message;
  int it = 0;

  auto min_eig_B = [&]() {
    double lmin = std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < nb; ++b) {
      Mat B = -P.blocks[b].F0;
      add_linear(P.blocks[b], y, B);
      lmin = std::min(lmin, Eigen::SelfAdjointEigenSolver<Mat>(B, Eigen::EigenvaluesOnly).eigenvalues().minCoeff());
    }
    return nb ? lmin : 0.0;
  };

  for (it = 0; it <= opts.max_iter; ++it) {
    // Residuals and objectives.
    bool chol_ok = true;
    for (std::size_t b = 0; b < nb; ++b) {
      Eigen::LLT<Mat> llt(S[b]);
      if (llt.info() != Eigen::Success) {
        chol_ok = false;
        break;
      }
      Sinv[b] = llt.solve(Mat::Identity(S[b].rows(), S[b].cols()));
      Sinv[b] = 0.5 * (Sinv[b] + Sinv[b].transpose());
      Mat B = -P.blocks[b].F0;
      add_linear(P.blocks[b], y, B);
      Rp[b] = S[b] - B;
    }
    if (!chol_ok) {
      status = Status::NumericalFailure;
      message = "slack matrix lost positive definiteness";
      break;
    }
    rd = P.c;
    if (K) rd -= P.A.transpose() * lam;
    for (std::size_t b = 0; b < nb; ++b) {
      const Blk& blk = P.blocks[b];
      for (std::size_t a = 0; a < blk.vars.size(); ++a) rd(Eigen::Index(blk.vars[a])) -= trace_with(blk, a, X[b]);
    }
    re = P.b - P.A * y;
    pobj = P.c.dot(y) + sdp.offset;
    dobj = (K ? P.b.dot(lam) : 0.0) + sdp.offset;
    double sx = 0.0, rpx = 0.0, pmax = 0.0, xmax = 0.0;
    for (std::size_t b = 0; b < nb; ++b) {
      dobj += frob(P.blocks[b].F0, X[b]);
      sx += frob(S[b], X[b]);
      rpx += frob(Rp[b], X[b]);
      pmax = std::max(pmax, Rp[b].cwiseAbs().maxCoeff());
      xmax = std::max(xmax, X[b].cwiseAbs().maxCoeff());
    }
    double mu = N ? sx / double(N) : 0.0;
    relgap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj));
    pinf = pmax / (1.0 + f0max);
    dinf = vmax(rd) / (1.0 + cmax);
    einf = vmax(re) / (1.0 + bmax);

    if (opts.on_iterate) {
      IterateInfo info;
      info.iter = it;
      info.pobj = pobj;
      info.dobj = dobj;
      info.mu = mu;
      info.sx = sx;
      info.rpx = rpx;
      info.lre = K ? lam.dot(re) : 0.0;
      info.yrd = y.dot(rd);
      info.pinf = pinf;
      info.dinf = dinf;
      info.einf = einf;
      opts.on_iterate(info);
    }

    double score = std::max({relgap, pinf, dinf, einf});
    if (score <= 1e-5 && score < best.score) best = {score, y, lam, pobj, dobj, relgap, it};
    if (relgap <= opts.gap_tol && pinf <= opts.feas_tol && dinf <= opts.feas_tol && einf <= opts.feas_tol) {
      if (min_eig_B() >= -opts.feas_tol) {
        status = Status::Optimal;
        break;
      }
    }
    if (vmax(y) > 1e10 || xmax > 1e10) {
      status = Status::NumericalFailure;
      message = vmax(y) > 1e10 ? "primal iterates diverged: relaxation may be unbounded"
                               : "dual iterates diverged: relaxation may be infeasible";
      break;
    }
    if (it == opts.max_iter) break;

    // Schur complement M_ij = tr(F_i X F_j S^-1).
    M.setZero();
    for (std::size_t b = 0; b < nb; ++b) {
      const Blk& blk = P.blocks[b];
      int n = blk.n;
      if (blk.vars.empty()) continue;
      G.resize(n, n);
      for (std::size_t a = 0; a < blk.vars.size(); ++a) {
        G.setZero();
        for (std::size_t k = blk.ptr[a]; k < blk.ptr[a + 1]; ++k) {
          const Ent& e = blk.ents[k];
          kernels::rank1_update(std::size_t(n), std::size_t(n), e.v, X[b].col(e.r).data(), Sinv[b].col(e.c).data(),
                                G.data(), std::size_t(n));
          if (e.r != e.c)
            kernels::rank1_update(std::size_t(n), std::size_t(n), e.v, X[b].col(e.c).data(),
                                  Sinv[b].col(e.r).data(), G.data(), std::size_t(n));
        }
        Eigen::Index ja = Eigen::Index(blk.vars[a]);
        for (std::size_t a2 = 0; a2 <= a; ++a2) M(Eigen::Index(blk.vars[a2]), ja) += trace_with(blk, a2, G);
      }
    }
    M = M.selfadjointView<Eigen::Upper>();
    for (std::size_t j = 0; j < m; ++j)
      if (!P.touched[j]) M(Eigen::Index(j), Eigen::Index(j)) = 1.0;
    if (!kkt.factor(M, P.A)) {
      status = Status::NumericalFailure;
      message = "Schur complement singular after regularization";
      break;
    }

    auto direction = [&](double mu_t, const std::vector<Mat>* C, Vec& dyo, Vec& dlo, std::vector<Mat>& dSo,
                         std::vector<Mat>& dXo) {
      g = -rd;
      for (std::size_t b = 0; b < nb; ++b) {
        int n = P.blocks[b].n;
        Mat T = mu_t * Mat::Identity(n, n) + X[b] * Rp[b];
        if (C) T -= (*C)[b];
        Rhs[b] = T * Sinv[b] - X[b];
        const Blk& blk = P.blocks[b];
        for (std::size_t a = 0; a < blk.vars.size(); ++a) g(Eigen::Index(blk.vars[a])) += trace_with(blk, a, Rhs[b]);
      }
      for (std::size_t j = 0; j < m; ++j)
        if (!P.touched[j]) g(Eigen::Index(j)) = 0.0;
      kkt.solve(g, re, dyo, dlo);
      for (std::size_t b = 0; b < nb; ++b) {
        int n = P.blocks[b].n;
        dSo[b] = -Rp[b];
        add_linear(P.blocks[b], dyo, dSo[b]);
        Mat T = mu_t * Mat::Identity(n, n) - X[b] * dSo[b];
        if (C) T -= (*C)[b];
        Mat D = T * Sinv[b] - X[b];
        dXo[b] = 0.5 * (D + D.transpose());
      }
    };

    auto steps = [&](const std::vector<Mat>& dSs, const std::vector<Mat>& dXs, double& ap, double& ad) {
      ap = ad = std::numeric_limits<double>::infinity();
      for (std::size_t b = 0; b < nb; ++b) {
        ap = std::min(ap, max_step(S[b], dSs[b]));
        ad = std::min(ad, max_step(X[b], dXs[b]));
      }
    };

    // Predictor.
    direction(0.0, nullptr, dya, dla, dSa, dXa);
    double ap, ad;
    steps(dSa, dXa, ap, ad);
    ap = std::min(1.0, ap);
    ad = std::min(1.0, ad);
    double mu_aff = 0.0;
    for (std::size_t b = 0; b < nb; ++b) mu_aff += frob(S[b] + ap * dSa[b], X[b] + ad * dXa[b]);
    mu_aff = N ? mu_aff / double(N) : 0.0;
    double sigma = mu > 0 ? std::clamp(std::pow(std::max(mu_aff, 0.0) / mu, 3.0), 0.0, 1.0) : 0.0;

    // Corrector.
    std::vector<Mat> Cc(nb);
    for (std::size_t b = 0; b < nb; ++b) Cc[b] = dXa[b] * dSa[b];
    direction(sigma * mu, &Cc, dy, dl, dS, dX);
    steps(dS, dX, ap, ad);
    ap = std::min(1.0, 0.98 * ap);
    ad = std::min(1.0, 0.98 * ad);

    y += ap * dy;
    for (std::size_t b = 0; b < nb; ++b) {
      S[b] += ap * dS[b];
      X[b] += ad * dX[b];
      S[b] = 0.5 * (S[b] + S[b].transpose());
      X[b] = 0.5 * (X[b] + X[b].transpose());
    }
    if (K) lam += ad * dl;

    stall = (ap < 1e-8 && ad < 1e-8) ? stall + 1 : 0;
    if (stall >= 3) {
      status = Status::NumericalFailure;
      message = "step lengths collapsed";
      break;
    }
  }

  if ((status == Status::IterLimit || status == Status::NumericalFailure) && std::isfinite(best.score)) {
    status = Status::NearOptimal;
    message = "stopped at iteration " + std::to_string(it) + "; best iterate " + std::to_string(best.iter) + " returned";
    y = best.y;
    lam = best.lam;
    pobj = best.pobj;
    dobj = best.dobj;
    relgap = best.relgap;
  } else if (status == Status::IterLimit) {
    message = "iteration limit reached";
  }

  rep.status = status;
  rep.message = message;
  rep.iterations = it;
  rep.primal_obj = sdp.bound_from(pobj);
  rep.dual_obj = sdp.bound_from(dobj);
  rep.bound = rep.primal_obj;
  rep.gap = relgap;
  rep.min_eig = min_eig_B();
  rep.y.resize(m + 1);
  rep.y[0] = 1.0;
  for (std::size_t j = 0; j < m; ++j) rep.y[j + 1] = y(Eigen::Index(j));
  rep.lambda.assign(sdp.equalities.size(), 0.0);
  for (Eigen::Index k = 0; k < K; ++k) rep.lambda[P.eq_rows[std::size_t(k)]] = lam(k);
  return finish(rep);
}

}  // namespace sublevel::sdp
