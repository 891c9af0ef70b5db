#pragma once

#include "pfgc/restructure.hpp"
#include "pfgc/spectral.hpp"
#include "pfgc/types.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pfgc {

// Filter pair used by the encoder: low-pass on M, high-pass on G.
enum class FilterCombo {
  PFGC,   // h1 on M, h4 on G
  PFGC1,  // h2 on M, h4 on G
  PFGC2,  // h1 on M, h3 on G
  PFGC3,  // h2 on M, h3 on G
};

FilterCombo parse_filter_combo(const std::string& name);
const char* filter_combo_name(FilterCombo combo);
FilterKind combo_low_pass(FilterCombo combo);
FilterKind combo_high_pass(FilterCombo combo);

struct ModelConfig {
  std::vector<int> hidden_dims = {256, 64};  // one entry per layer
  int se_ratio = 4;
  double mu = 0.5;
  int k_order = 1;
  double beta = 1.0;
  double gamma1 = 1.0;
  double gamma2 = 0.1;
  double lr = 1e-3;
  int epochs = 200;
  int warmup_epochs = 50;
  int q_refresh = 5;
  std::uint64_t seed = 0;
  FilterCombo filter_combo = FilterCombo::PFGC;
  int n_clusters = 0;       // 0: take C from the labels
  bool relu_hidden = true;  // identity when false (linearity tests)

  int embed_dim() const { return hidden_dims.back(); }
};

struct ModelState {
  std::vector<Matrix> layer_weights;  // W^(l): d_{l} x d_{l+1}
  Matrix se_down;                     // d_h x d_h/ratio
  Matrix se_up;                       // d_h/ratio x d_h
  Matrix decoder;                     // d_h x d
  Matrix centers;                     // C x d_h, valid when centers_initialized
  bool centers_initialized = false;
};

struct EpochLoss {
  double re = 0.0;
  double hs = 0.0;
  double clu = 0.0;
  double total = 0.0;
};

struct TrainReport {
  std::vector<EpochLoss> epoch_losses;
  Matrix final_p;               // N x C soft assignment
  std::vector<int> labels;      // argmax of final_p
  double wall_seconds = 0.0;
  bool aborted = false;
  std::string abort_reason;     // "nan" | "divergence" | ""
  int centers_epoch = -1;       // epoch index at which k-means ran
  double max_p_rowsum_dev = 0.0;
  double max_q_rowsum_dev = 0.0;
  bool cluster_collapse = false;
};

// One encoder pass: H^(l) = [(1-mu) F_low + mu F_high] H^(l-1) W^(l-1), ReLU
// between layers, identity on the last. H^(0) = X.
Matrix encode(const Matrix& x, const SpectralBasis& basis_m,
              const SpectralBasis& basis_g, const ModelState& state,
              const ModelConfig& config);

// s = column mean of H; gate = sigmoid(relu(s W1) W2); columns of H scaled by
// the gate. Optionally reports the gate.
Matrix se_block(const Matrix& h, const ModelState& state,
                Vector* gate_out = nullptr);

// (1/N^2) || H H^T - sum_{i=1..k} A~^i ||_F^2
double loss_hs(const Matrix& h, const Matrix& adj_norm, int k_order);

// Sum over rows of (1 - cos(X_i, Xbar_i))^2; zero-norm rows use cos = 0.
double loss_re(const Matrix& x, const Matrix& x_dec);

// Student-t soft assignment against the centers; rows sum to 1.
Matrix soft_assign(const Matrix& h, const Matrix& centers, double beta);

// q_ij proportional to p_ij^2 / column_mass_j; empty columns contribute 0.
Matrix target_distribution(const Matrix& p);

// KL(Q || P) with the 0 log 0 := 0 convention; Q is a constant target.
double loss_clu(const Matrix& p, const Matrix& q);

std::vector<int> predict(const Matrix& p);

std::pair<ModelState, TrainReport> train(const AttributedGraph& graph,
                                         const RestructuredGraphs& restructured,
                                         const ModelConfig& config);

// Central finite differences (step 1e-5) against the analytic gradients of
// the full objective, on a small probe problem. Returns the max over
// parameter tensors of ||g_fd - g_an|| / max(||g_fd||, ||g_an||, 1e-12).
double check_gradients(const AttributedGraph& probe,
                       const RestructuredGraphs& restructured,
                       const ModelConfig& config);

// The checkpoint header carries the model config plus an optional free-form
// JSON blob (the CLI stores its resolved run config there).
void save_checkpoint(const std::string& path, const ModelState& state,
                     const ModelConfig& config,
                     const std::string& extra_json = "");
std::pair<ModelState, ModelConfig> load_checkpoint(
    const std::string& path, std::string* extra_json = nullptr);

}  // namespace pfgc
