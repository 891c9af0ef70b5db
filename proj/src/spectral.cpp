#include "pfgc/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <unordered_map>

namespace fs = std::filesystem;

namespace pfgc {

namespace {

std::mutex g_cache_mutex;
std::unordered_map<std::uint64_t, BasisPtr> g_memory_cache;
std::atomic<std::size_t> g_compute_count{0};
std::string g_cache_dir;
bool g_cache_dir_set = false;

constexpr char kMagic[8] = {'P', 'F', 'G', 'C', 'E', 'I', 'G', '1'};

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t h) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t content_hash(const Matrix& m) {
  std::uint64_t h = 14695981039346656037ULL;
  const std::uint64_t n = static_cast<std::uint64_t>(m.rows());
  h = fnv1a(&n, sizeof(n), h);
  h = fnv1a(m.data(), sizeof(double) * m.size(), h);
  return h;
}

std::string resolved_cache_dir() {
  if (!g_cache_dir_set) {
    const char* env = std::getenv("PFGC_CACHE_DIR");
    g_cache_dir = env ? env : ".pfgc-cache";
    g_cache_dir_set = true;
  }
  return g_cache_dir;
}

std::string cache_path(const std::string& dir, std::uint64_t hash) {
  char name[32];
  std::snprintf(name, sizeof(name), "%016llx.eig",
                static_cast<unsigned long long>(hash));
  return dir + "/" + name;
}

BasisPtr load_from_disk(const std::string& dir, std::uint64_t hash,
                        Eigen::Index n) {
  std::ifstream in(cache_path(dir, hash), std::ios::binary);
  if (!in) return nullptr;
  char magic[8];
  if (!in.read(magic, 8) || std::memcmp(magic, kMagic, 8) != 0) return nullptr;
  std::uint64_t stored_n = 0;
  if (!in.read(reinterpret_cast<char*>(&stored_n), 8)) return nullptr;
  if (stored_n != static_cast<std::uint64_t>(n)) return nullptr;

  auto basis = std::make_shared<SpectralBasis>();
  basis->source_hash = hash;
  basis->eigvals.resize(n);
  if (!in.read(reinterpret_cast<char*>(basis->eigvals.data()),
               static_cast<std::streamsize>(sizeof(double) * n))) {
    return nullptr;
  }
  basis->eigvecs.resize(n, n);
  std::vector<double> row(static_cast<size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!in.read(reinterpret_cast<char*>(row.data()),
                 static_cast<std::streamsize>(sizeof(double) * n))) {
      return nullptr;
    }
    for (Eigen::Index j = 0; j < n; ++j) basis->eigvecs(i, j) = row[j];
  }
  return basis;
}

void store_to_disk(const std::string& dir, const SpectralBasis& basis) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) return;  // cache is best-effort

  const std::string final_path = cache_path(dir, basis.source_hash);
  const std::string tmp_path = final_path + ".tmp";
  {
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    if (!out) return;
    const Eigen::Index n = basis.eigvals.size();
    const std::uint64_t n64 = static_cast<std::uint64_t>(n);
    out.write(kMagic, 8);
    out.write(reinterpret_cast<const char*>(&n64), 8);
    out.write(reinterpret_cast<const char*>(basis.eigvals.data()),
              static_cast<std::streamsize>(sizeof(double) * n));
    std::vector<double> row(static_cast<size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) row[j] = basis.eigvecs(i, j);
      out.write(reinterpret_cast<const char*>(row.data()),
                static_cast<std::streamsize>(sizeof(double) * n));
    }
    if (!out.good()) {
      out.close();
      fs::remove(tmp_path, ec);
      return;
    }
  }
  fs::rename(tmp_path, final_path, ec);
  if (ec) fs::remove(tmp_path, ec);
}

}  // namespace

void set_eig_cache_dir(const std::string& dir) {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_cache_dir = dir;
  g_cache_dir_set = true;
}

std::string eig_cache_dir() {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return resolved_cache_dir();
}

void clear_eig_memory_cache() {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_memory_cache.clear();
}

std::size_t eig_compute_count() { return g_compute_count.load(); }

BasisPtr eig_sym(const Matrix& matrix) {
  const Eigen::Index n = matrix.rows();
  if (matrix.cols() != n) fail(ErrorKind::Shape, "eig_sym: matrix not square");
  if (n == 0) fail(ErrorKind::Shape, "eig_sym: empty matrix");
  const double asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10) {
    fail(ErrorKind::Shape, "eig_sym: matrix not symmetric (max dev " +
                               std::to_string(asym) + ")");
  }

  const std::uint64_t hash = content_hash(matrix);
  std::string disk_dir;
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_memory_cache.find(hash);
    if (it != g_memory_cache.end()) return it->second;
    disk_dir = resolved_cache_dir();
  }

  if (!disk_dir.empty()) {
    if (BasisPtr fromdisk = load_from_disk(disk_dir, hash, n)) {
      std::lock_guard<std::mutex> lock(g_cache_mutex);
      auto [it, inserted] = g_memory_cache.emplace(hash, fromdisk);
      return it->second;
    }
  }

  Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix);
  if (solver.info() != Eigen::Success) {
    fail(ErrorKind::Numerical, "eig_sym: eigendecomposition failed");
  }
  auto basis = std::make_shared<SpectralBasis>();
  basis->eigvals = solver.eigenvalues();
  basis->eigvecs = solver.eigenvectors();
  basis->source_hash = hash;
  g_compute_count.fetch_add(1);

  if (!disk_dir.empty()) store_to_disk(disk_dir, *basis);
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  auto [it, inserted] = g_memory_cache.emplace(hash, BasisPtr(basis));
  return it->second;
}

FilterKind parse_filter_kind(const std::string& name) {
  if (name == "h1" || name == "global_low_pass") return FilterKind::GlobalLowPass;
  if (name == "h2" || name == "local_low_pass") return FilterKind::LocalLowPass;
  if (name == "h3" || name == "global_high_pass") return FilterKind::GlobalHighPass;
  if (name == "h4" || name == "local_high_pass") return FilterKind::LocalHighPass;
  fail(ErrorKind::Config, "unknown filter kind '" + name + "'");
}

const char* filter_kind_name(FilterKind kind) {
  switch (kind) {
    case FilterKind::GlobalLowPass:
      return "h1";
    case FilterKind::LocalLowPass:
      return "h2";
    case FilterKind::GlobalHighPass:
      return "h3";
    case FilterKind::LocalHighPass:
      return "h4";
  }
  return "unknown";
}

Vector filter_response(FilterKind kind, const SpectralBasis& basis,
                       LocalLambdaMode mode) {
  const Eigen::Index n = basis.eigvals.size();
  const double lam1 = basis.lambda_min();
  const double lamn = basis.lambda_max();
  const double span = lamn - lam1;

  auto degenerate = [&](const char* which) {
    std::fprintf(stderr,
                 "pfgc: warning: degenerate spectrum (lambda_1 == lambda_N); "
                 "%s response set to all-ones\n",
                 which);
    return Vector::Ones(n);
  };

  Vector resp(n);
  switch (kind) {
    case FilterKind::GlobalLowPass: {
      const double lo = std::exp(1.0 - lamn);
      const double hi = std::exp(1.0 - lam1);
      if (!(hi - lo > 0.0)) return degenerate("h1");
      for (Eigen::Index t = 0; t < n; ++t) {
        resp(t) = (std::exp(1.0 - basis.eigvals(t)) - lo) / (hi - lo);
      }
      return resp;
    }
    case FilterKind::GlobalHighPass: {
      const double lo = std::exp(lam1);
      const double hi = std::exp(lamn);
      if (!(hi - lo > 0.0)) return degenerate("h3");
      for (Eigen::Index t = 0; t < n; ++t) {
        resp(t) = (std::exp(basis.eigvals(t)) - lo) / (hi - lo);
      }
      return resp;
    }
    case FilterKind::LocalLowPass: {
      if (mode == LocalLambdaMode::FixedTwoThirds) {
        return (1.0 - (2.0 / 3.0) * basis.eigvals.array()).matrix();
      }
      if (!(span > 0.0) || lamn <= 0.0) return degenerate("h2");
      return (1.0 - basis.eigvals.array() / lamn).matrix();
    }
    case FilterKind::LocalHighPass: {
      if (mode == LocalLambdaMode::FixedTwoThirds) {
        return ((2.0 / 3.0) * basis.eigvals.array()).matrix();
      }
      if (!(span > 0.0) || lamn <= 0.0) return degenerate("h4");
      return (basis.eigvals.array() / lamn).matrix();
    }
  }
  fail(ErrorKind::Config, "unknown filter kind");
}

Matrix filter_operator(FilterKind kind, const SpectralBasis& basis,
                       LocalLambdaMode mode) {
  Vector resp = filter_response(kind, basis, mode);
  return basis.eigvecs * resp.asDiagonal() * basis.eigvecs.transpose();
}

Matrix apply_filter(FilterKind kind, const SpectralBasis& basis,
                    const Matrix& signal, LocalLambdaMode mode) {
  if (signal.rows() != basis.eigvals.size()) {
    fail(ErrorKind::Shape, "apply_filter: signal row count mismatch");
  }
  Vector resp = filter_response(kind, basis, mode);
  Matrix coeffs = basis.eigvecs.transpose() * signal;
  coeffs.array().colwise() *= resp.array();
  return basis.eigvecs * coeffs;
}

Matrix apply_filter_direct(FilterKind kind, const Matrix& laplacian,
                           const Matrix& signal) {
  if (laplacian.rows() != laplacian.cols() ||
      laplacian.cols() != signal.rows()) {
    fail(ErrorKind::Shape, "apply_filter_direct: dimension mismatch");
  }
  switch (kind) {
    case FilterKind::LocalLowPass:
      return signal - (2.0 / 3.0) * (laplacian * signal);
    case FilterKind::LocalHighPass:
      return (2.0 / 3.0) * (laplacian * signal);
    default:
      fail(ErrorKind::Config,
           "apply_filter_direct only supports the local filters");
  }
}

}  // namespace pfgc
