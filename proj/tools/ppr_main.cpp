// Copyright 2026 The ppr Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ppr/analytic_linearization.hpp"
#include "ppr/codec.hpp"
#include "ppr/dct.hpp"
#include "ppr/denoiser.hpp"
#include "ppr/io.hpp"
#include "ppr/jacobian.hpp"
#include "ppr/manifest.hpp"
#include "ppr/metrics.hpp"
#include "ppr/presets.hpp"
#include "ppr/quantizer_fit.hpp"
#include "ppr/solver.hpp"
#include "ppr/subprocess.hpp"
#include "ppr/transform_coder.hpp"

namespace {

// Exit codes: 0 success, 2 usage, 3 I/O, 4 codec/subprocess, 5 solver.
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitCodec = 4;
constexpr int kExitSolver = 5;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> parse_range(const std::string& spec) {
  double a = 0.0, s = 0.0, b = 0.0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &a, &s, &b) != 3 || !(s > 0.0)) {
    throw UsageError("bad range '" + spec + "', expected start:step:stop");
  }
  std::vector<double> out;
  const double eps = 1e-9 * std::max(1.0, std::abs(b));
  for (double v = a; v <= b + eps; v += s) out.push_back(v);
  if (out.empty()) throw UsageError("empty range '" + spec + "'");
  return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t next = csv.find(',', pos);
    if (next == std::string::npos) next = csv.size();
    out.push_back(std::stod(csv.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

struct CodecSpec {
  std::string text;
  std::unique_ptr<ppr::Codec> codec;
  std::optional<ppr::CodecKind> kind;
  double parameter = 0.0;
};

CodecSpec make_codec(const std::string& spec) {
  CodecSpec out;
  out.text = spec;
  if (spec.rfind("scalar:", 0) == 0) {
    out.parameter = std::stod(spec.substr(7));
    out.codec = std::make_unique<ppr::ScalarQuantCodec>(out.parameter);
    out.kind = ppr::CodecKind::scalar;
  } else if (spec.rfind("pair:", 0) == 0) {
    out.parameter = std::stod(spec.substr(5));
    out.codec = std::make_unique<ppr::PairTransformCodec>(out.parameter);
    out.kind = ppr::CodecKind::pair;
  } else if (spec.rfind("dct:", 0) == 0) {
    out.parameter = std::stod(spec.substr(4));
    out.codec = std::make_unique<ppr::BlockDctCodec>(out.parameter);
    out.kind = ppr::CodecKind::dct;
  } else if (spec.rfind("cmd:", 0) == 0) {
    out.codec = std::make_unique<ppr::SubprocessCodec>(spec.substr(4));
  } else {
    throw UsageError("unknown codec '" + spec +
                     "' (expected scalar:STEP, pair:STEP, dct:SCALE, or cmd:TEMPLATE)");
  }
  return out;
}

std::unique_ptr<ppr::Denoiser> make_denoiser(const std::string& spec) {
  if (spec == "gauss") return std::make_unique<ppr::GaussianBlurDenoiser>();
  if (spec == "dct") return std::make_unique<ppr::DctThresholdDenoiser>();
  if (spec.rfind("cmd:", 0) == 0) {
    return std::make_unique<ppr::SubprocessDenoiser>(spec.substr(4));
  }
  throw UsageError("unknown denoiser '" + spec +
                   "' (expected gauss, dct, or cmd:TEMPLATE)");
}

void parse_grid(const std::string& spec, int& h, int& w) {
  if (std::sscanf(spec.c_str(), "%dx%d", &h, &w) != 2 || h < 1 || w < 1) {
    throw UsageError("bad grid '" + spec + "', expected HxW");
  }
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ppr::IoError("cannot open " + path.string() + " for writing");
  return out;
}

// ---------------------------------------------------------------------------
// postprocess

struct PostprocessOptions {
  std::string input;
  std::string output;
  std::string codec = "";
  std::string denoiser = "";
  double rate = 0.0;
  std::string area = "aligned";
  double lambda = 0.0, beta = 0.0, mu = -1.0;
  int max_iters = 0;
  std::string output_iterate = "";
  std::string steps_csv = "";
  double delta_tilde = 0.0;
  std::string grid = "";
  bool no_clip = false;
  double sigma_scale = 1.0;
  unsigned long long seed = 12345;
  int threads = 1;
  std::string log_path = "";
  std::string manifest_path = "";
};

ppr::Manifest to_manifest(const PostprocessOptions& o, const ppr::SolverConfig& cfg) {
  ppr::Manifest m;
  m["command"] = "postprocess";
  m["input"] = o.input;
  m["output"] = o.output;
  m["codec"] = o.codec;
  m["denoiser"] = o.denoiser;
  m["area"] = o.area;
  m["lambda"] = format_double(cfg.lambda);
  m["beta"] = format_double(cfg.beta);
  m["mu"] = format_double(cfg.mu);
  m["max_iters"] = std::to_string(cfg.max_iters);
  m["stop_threshold"] = format_double(cfg.stop_threshold);
  std::string steps;
  for (double d : cfg.steps.deltas()) {
    if (!steps.empty()) steps += ",";
    steps += format_double(d);
  }
  m["steps"] = steps;
  m["grid"] = std::to_string(cfg.block_height) + "x" + std::to_string(cfg.block_width);
  m["clip"] = cfg.clip_output ? "1" : "0";
  m["output_iterate"] =
      cfg.output_iterate == ppr::SolverConfig::Output::denoised ? "v" : "x";
  m["sigma_scale"] = format_double(cfg.sigma_scale);
  m["seed"] = std::to_string(o.seed);
  m["threads"] = std::to_string(cfg.threads);
  if (!o.log_path.empty()) m["log"] = o.log_path;
  return m;
}

PostprocessOptions from_manifest(const ppr::Manifest& m) {
  PostprocessOptions o;
  auto need = [&](const std::string& key) {
    auto it = m.find(key);
    if (it == m.end()) throw UsageError("manifest missing key '" + key + "'");
    return it->second;
  };
  o.input = need("input");
  o.output = need("output");
  o.codec = need("codec");
  o.denoiser = need("denoiser");
  o.area = need("area");
  o.lambda = std::stod(need("lambda"));
  o.beta = std::stod(need("beta"));
  o.mu = std::stod(need("mu"));
  o.max_iters = std::stoi(need("max_iters"));
  o.steps_csv = need("steps");
  o.grid = need("grid");
  o.no_clip = need("clip") == "0";
  o.output_iterate = need("output_iterate");
  o.sigma_scale = std::stod(need("sigma_scale"));
  o.seed = std::stoull(need("seed"));
  o.threads = std::stoi(need("threads"));
  if (auto it = m.find("log"); it != m.end()) o.log_path = it->second;
  return o;
}

int run_postprocess(const PostprocessOptions& opts) {
  if (opts.codec.empty()) throw UsageError("--codec is required");
  if (opts.denoiser.empty()) throw UsageError("--denoiser is required");

  CodecSpec codec = make_codec(opts.codec);
  auto denoiser = make_denoiser(opts.denoiser);

  // Start from the preset when a rate is given for a bundled codec; explicit
  // flags override individual fields. External codecs take explicit
  // parameters only.
  ppr::SolverConfig cfg;
  bool have_preset = false;
  const bool rotated = opts.area == "rotated";
  if (opts.rate > 0.0) {
    if (!codec.kind) {
      throw UsageError("--rate presets apply to bundled codecs only; "
                       "pass explicit --lambda/--beta/--mu/--delta-tilde");
    }
    cfg = ppr::preset(*codec.kind, opts.rate, rotated);
    have_preset = true;
  }
  if (opts.lambda > 0.0) cfg.lambda = opts.lambda;
  if (opts.beta > 0.0) cfg.beta = opts.beta;
  if (opts.mu >= 0.0) cfg.mu = opts.mu;
  if (opts.max_iters > 0) cfg.max_iters = opts.max_iters;
  if (!have_preset && !(opts.lambda > 0.0 && opts.beta > 0.0)) {
    throw UsageError("need --rate (bundled codecs) or explicit --lambda and --beta");
  }

  if (!opts.steps_csv.empty()) {
    cfg.steps = ppr::StepSet(parse_double_list(opts.steps_csv));
  } else if (opts.delta_tilde > 0.0) {
    cfg.steps = ppr::StepSet::scaled_default(opts.delta_tilde);
  } else if (!have_preset) {
    if (codec.kind == ppr::CodecKind::scalar || codec.kind == ppr::CodecKind::pair) {
      cfg.steps = ppr::StepSet::scaled_default(codec.parameter);
    } else if (codec.kind == ppr::CodecKind::dct) {
      cfg.steps = ppr::StepSet::scaled_default(
          static_cast<const ppr::BlockDctCodec&>(*codec.codec).effective_step());
    } else {
      throw UsageError("external codecs need --steps or --delta-tilde");
    }
  }

  if (!opts.grid.empty()) {
    parse_grid(opts.grid, cfg.block_height, cfg.block_width);
  } else if (!have_preset) {
    if (const auto shape = codec.codec->block_structure()) {
      cfg.block_height = shape->height;
      cfg.block_width = shape->width;
    } else {
      // assumed independence structure for black-box codecs
      cfg.block_height = 8;
      cfg.block_width = 8;
    }
  }

  cfg.clip_output = !opts.no_clip;
  if (!opts.output_iterate.empty()) {
    if (opts.output_iterate == "x") {
      cfg.output_iterate = ppr::SolverConfig::Output::data;
    } else if (opts.output_iterate == "v") {
      cfg.output_iterate = ppr::SolverConfig::Output::denoised;
    } else {
      throw UsageError("--output-iterate must be x or v");
    }
  }
  cfg.sigma_scale = opts.sigma_scale;
  cfg.threads = opts.threads;
  cfg.record_iterates = !opts.log_path.empty();

  if (rotated) {
    if (codec.kind != ppr::CodecKind::pair) {
      throw UsageError("--area rotated is only defined for the pair codec");
    }
    const auto* pair = static_cast<const ppr::PairTransformCodec*>(codec.codec.get());
    cfg.linearizer = [pair](const ppr::Codec&, const ppr::ImageBuffer& z,
                            const ppr::ImageBuffer&, const ppr::BlockGrid& grid,
                            const ppr::StepSet& steps, int) {
      return ppr::linearize_pair_rotated(*pair, z, grid, steps);
    };
  }

  const ppr::ImageBuffer y = ppr::read_pgm(opts.input);
  const ppr::RunResult result = ppr::run(*codec.codec, y, *denoiser, cfg);
  ppr::write_pgm(result.restored, opts.output);

  if (!opts.log_path.empty()) {
    auto log = open_output(opts.log_path);
    log << "iter,delta_u,objective,psnr_vs_input\n";
    char buf[160];
    for (std::size_t i = 0; i < result.state.delta_u_history.size(); ++i) {
      const double p = ppr::psnr(y, result.state.iterates[i].v_hat);
      std::snprintf(buf, sizeof buf, "%zu,%.12g,%.12g,%.12g\n", i + 1,
                    result.state.delta_u_history[i],
                    result.state.objective_history[i], p);
      log << buf;
    }
  }

  const std::string manifest_path =
      opts.manifest_path.empty() ? opts.output + ".manifest" : opts.manifest_path;
  ppr::write_manifest(to_manifest(opts, cfg), manifest_path);

  std::cout << "restored " << opts.input << " -> " << opts.output << " ("
            << result.state.iterations << " iterations)\n";
  return 0;
}

// ---------------------------------------------------------------------------
// analyze subcommands

int run_analyze_quantizer(const std::string& kind, const std::string& x0_spec,
                          const std::string& delta_spec, const std::string& out_path) {
  ppr::ScalarQuantizer q = [&] {
    if (kind == "two-level") return ppr::ScalarQuantizer::two_level();
    if (kind.rfind("uniform:", 0) == 0) {
      return ppr::ScalarQuantizer::uniform(std::stod(kind.substr(8)));
    }
    throw UsageError("unknown quantizer kind '" + kind +
                     "' (expected two-level or uniform:STEP)");
  }();
  const auto x0 = parse_range(x0_spec);
  const auto deltas = parse_range(delta_spec);
  if (out_path.empty()) {
    ppr::sweep_quantizer(q, x0, deltas, std::cout);
  } else {
    auto out = open_output(out_path);
    ppr::sweep_quantizer(q, x0, deltas, out);
  }
  return 0;
}

int run_analyze_transform_filter(int size, double step_exponent, double delta,
                                 const std::string& out_path) {
  std::vector<ppr::ScalarQuantizer> quants;
  Eigen::VectorXd mid(size);
  for (int i = 1; i <= size; ++i) {
    const double step = std::exp2(step_exponent * i);
    quants.push_back(ppr::ScalarQuantizer::uniform(step));
    mid[i - 1] = step / 2.0;  // center of the first positive cell
  }
  ppr::TransformCoder tc(ppr::dct_matrix(size), std::move(quants));
  const Eigen::VectorXd x0 = tc.transform() * mid;
  const Eigen::VectorXd gains = ppr::filter_response(tc, x0, delta);

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file = open_output(out_path);
    out = &file;
  }
  *out << "index,step,gain\n";
  char buf[96];
  for (int i = 0; i < size; ++i) {
    std::snprintf(buf, sizeof buf, "%d,%.12g,%.12g\n", i + 1,
                  std::exp2(step_exponent * (i + 1)), gains[i]);
    *out << buf;
  }
  return 0;
}

int run_analyze_transform_pair2d(double coeff2, const std::string& x1_spec,
                                 const std::string& delta_spec, bool aligned,
                                 unsigned long long seed, int samples,
                                 const std::string& out_path) {
  const Eigen::Matrix2d u = ppr::PairTransformCodec::rotation();
  ppr::TransformCoder tc(
      u, {ppr::ScalarQuantizer::two_level(), ppr::ScalarQuantizer::two_level()});

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file = open_output(out_path);
    out = &file;
  }
  *out << "x1,delta,a11,a12,a21,a22,b1,b2,lmse\n";
  char buf[256];
  for (double x1 : parse_range(x1_spec)) {
    for (double d : parse_range(delta_spec)) {
      const Eigen::Vector2d t0(x1, coeff2);
      const Eigen::Vector2d x0 = u * t0;
      const ppr::VectorLinearFit fit = ppr::fit_transform_coder(
          tc, x0, d, aligned ? ppr::ApproxArea::aligned : ppr::ApproxArea::rotated,
          seed, samples);
      std::snprintf(buf, sizeof buf,
                    "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", x1, d,
                    fit.matrix(0, 0), fit.matrix(0, 1), fit.matrix(1, 0),
                    fit.matrix(1, 1), fit.offset[0], fit.offset[1], fit.lmse);
      *out << buf;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// jacobian

int run_jacobian(const std::string& input, const std::string& codec_spec,
                 const std::string& grid_spec, const std::string& steps_csv,
                 double delta_tilde, const std::string& out_dir, bool count_calls) {
  CodecSpec codec = make_codec(codec_spec);
  const ppr::ImageBuffer z = ppr::read_pgm(input);

  int bh = 8, bw = 8;
  if (!grid_spec.empty()) {
    parse_grid(grid_spec, bh, bw);
  } else if (const auto shape = codec.codec->block_structure()) {
    bh = shape->height;
    bw = shape->width;
  }
  const ppr::BlockGrid grid(z.height(), z.width(), bh, bw);

  ppr::StepSet steps = [&] {
    if (!steps_csv.empty()) return ppr::StepSet(parse_double_list(steps_csv));
    if (delta_tilde > 0.0) return ppr::StepSet::scaled_default(delta_tilde);
    if (codec.kind == ppr::CodecKind::scalar || codec.kind == ppr::CodecKind::pair) {
      return ppr::StepSet::scaled_default(codec.parameter);
    }
    if (codec.kind == ppr::CodecKind::dct) {
      return ppr::StepSet::scaled_default(
          static_cast<const ppr::BlockDctCodec&>(*codec.codec).effective_step());
    }
    throw UsageError("external codecs need --steps or --delta-tilde");
  }();

  // count codec applications through a forwarding wrapper
  struct Counting : ppr::Codec {
    const ppr::Codec* inner;
    mutable std::atomic<long> calls{0};
    ppr::ImageBuffer apply(const ppr::ImageBuffer& x) const override {
      ++calls;
      return inner->apply(x);
    }
    std::optional<ppr::BlockShape> block_structure() const override {
      return inner->block_structure();
    }
    std::string descriptor() const override { return inner->descriptor(); }
  } counting;
  counting.inner = codec.codec.get();

  const ppr::ImageBuffer base = codec.codec->apply(z);
  const ppr::LinearizedCodec lin =
      ppr::estimate_block_jacobian(counting, z, base, grid, steps);

  std::filesystem::create_directories(out_dir);
  char name[64];
  for (std::size_t i = 0; i < lin.block_count(); ++i) {
    std::snprintf(name, sizeof name, "block_%04zu.txt", i);
    ppr::write_matrix_text(lin.block(i), std::filesystem::path(out_dir) / name);
  }
  std::cout << "wrote " << lin.block_count() << " Jacobian blocks to " << out_dir
            << "\n";
  if (count_calls) {
    std::cout << "codec invocations: " << counting.calls.load() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

int dispatch(int argc, char** argv) {
  CLI::App app{"Compression-artifact reduction via regularized inversion of a "
               "black-box codec, plus local linear analysis of quantizers"};
  app.require_subcommand(1);

  // postprocess
  PostprocessOptions post;
  std::string from_manifest_path;
  auto* post_cmd = app.add_subcommand("postprocess", "restore a compressed image");
  post_cmd->add_option("--input", post.input, "compressed input PGM");
  post_cmd->add_option("--output", post.output, "restored output PGM");
  post_cmd->add_option("--codec", post.codec,
                       "scalar:STEP | pair:STEP | dct:SCALE | cmd:TEMPLATE");
  post_cmd->add_option("--denoiser", post.denoiser, "gauss | dct | cmd:TEMPLATE");
  post_cmd->add_option("--rate", post.rate, "bit-rate driving the parameter preset");
  post_cmd->add_option("--area", post.area, "aligned | rotated (pair codec)")
      ->check(CLI::IsMember({"aligned", "rotated"}));
  post_cmd->add_option("--lambda", post.lambda, "coupling weight");
  post_cmd->add_option("--beta", post.beta, "regularization weight");
  post_cmd->add_option("--mu", post.mu, "linearization proximity weight");
  post_cmd->add_option("--max-iters", post.max_iters, "iteration budget");
  post_cmd->add_option("--output-iterate", post.output_iterate, "x | v");
  post_cmd->add_option("--steps", post.steps_csv, "derivative steps (csv)");
  post_cmd->add_option("--delta-tilde", post.delta_tilde,
                       "effective step size for the default step set");
  post_cmd->add_option("--grid", post.grid, "Jacobian block shape HxW");
  post_cmd->add_flag("--no-clip", post.no_clip, "skip clamping the output to [0,255]");
  post_cmd->add_option("--sigma-scale", post.sigma_scale,
                       "multiplier on the denoiser noise level");
  post_cmd->add_option("--seed", post.seed, "seed for randomized components");
  post_cmd->add_option("--threads", post.threads, "worker thread cap");
  post_cmd->add_option("--log", post.log_path, "per-iteration state CSV");
  post_cmd->add_option("--manifest", post.manifest_path,
                       "manifest path (default OUTPUT.manifest)");
  post_cmd->add_option("--from-manifest", from_manifest_path,
                       "re-run a recorded configuration");

  // analyze-quantizer
  std::string aq_kind = "two-level", aq_x0, aq_delta, aq_out;
  auto* aq_cmd = app.add_subcommand("analyze-quantizer",
                                    "optimal local line fits over a parameter grid");
  aq_cmd->add_option("--kind", aq_kind, "two-level | uniform:STEP");
  aq_cmd->add_option("--x0", aq_x0, "interval centers start:step:stop")->required();
  aq_cmd->add_option("--delta", aq_delta, "interval half-widths start:step:stop")
      ->required();
  aq_cmd->add_option("--out", aq_out, "CSV path (default stdout)");

  // analyze-transform
  std::string at_mode = "filter", at_x1, at_delta_range, at_out;
  int at_size = 32, at_samples = 200000;
  double at_step_exp = 0.25, at_delta = 50.0, at_coeff2 = 15.0;
  bool at_aligned = false;
  unsigned long long at_seed = 12345;
  auto* at_cmd = app.add_subcommand("analyze-transform",
                                    "local linear analysis of transform coders");
  at_cmd->add_option("--mode", at_mode, "filter | pair2d")
      ->check(CLI::IsMember({"filter", "pair2d"}));
  at_cmd->add_option("--size", at_size, "transform size (filter mode)");
  at_cmd->add_option("--step-exp", at_step_exp,
                     "per-coefficient step exponent: step_i = 2^(exp*i)");
  at_cmd->add_option("--delta", at_delta, "neighborhood half-width (filter mode)");
  at_cmd->add_option("--coeff2", at_coeff2, "fixed second coefficient (pair2d)");
  at_cmd->add_option("--x1", at_x1, "first-coefficient range start:step:stop (pair2d)");
  at_cmd->add_option("--delta-range", at_delta_range,
                     "half-width range start:step:stop (pair2d)");
  at_cmd->add_flag("--aligned", at_aligned, "fit over the axis-aligned area (pair2d)");
  at_cmd->add_option("--seed", at_seed, "Monte-Carlo seed (aligned fits)");
  at_cmd->add_option("--samples", at_samples, "Monte-Carlo sample count");
  at_cmd->add_option("--out", at_out, "CSV path (default stdout)");

  // jacobian
  std::string jc_input, jc_codec, jc_grid, jc_steps, jc_out_dir = "jacobian-out";
  double jc_delta_tilde = 0.0;
  bool jc_count = false;
  auto* jc_cmd = app.add_subcommand("jacobian", "dump estimated Jacobian blocks");
  jc_cmd->add_option("--input", jc_input, "linearization point PGM")->required();
  jc_cmd->add_option("--codec", jc_codec, "codec spec")->required();
  jc_cmd->add_option("--grid", jc_grid, "block shape HxW");
  jc_cmd->add_option("--steps", jc_steps, "derivative steps (csv)");
  jc_cmd->add_option("--delta-tilde", jc_delta_tilde, "effective step size");
  jc_cmd->add_option("--out-dir", jc_out_dir, "output directory");
  jc_cmd->add_flag("--count-calls", jc_count, "print the codec invocation count");

  // metrics
  std::string mt_ref, mt_test;
  auto* mt_cmd = app.add_subcommand("metrics", "PSNR and SSIM between two images");
  mt_cmd->add_option("ref", mt_ref, "reference PGM")->required();
  mt_cmd->add_option("test", mt_test, "test PGM")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (post_cmd->parsed()) {
    if (!from_manifest_path.empty()) {
      return run_postprocess(from_manifest(ppr::read_manifest(from_manifest_path)));
    }
    if (post.input.empty() || post.output.empty()) {
      throw UsageError("postprocess needs --input and --output (or --from-manifest)");
    }
    return run_postprocess(post);
  }
  if (aq_cmd->parsed()) {
    return run_analyze_quantizer(aq_kind, aq_x0, aq_delta, aq_out);
  }
  if (at_cmd->parsed()) {
    if (at_mode == "filter") {
      return run_analyze_transform_filter(at_size, at_step_exp, at_delta, at_out);
    }
    if (at_x1.empty() || at_delta_range.empty()) {
      throw UsageError("pair2d mode needs --x1 and --delta-range");
    }
    return run_analyze_transform_pair2d(at_coeff2, at_x1, at_delta_range, at_aligned,
                                        at_seed, at_samples, at_out);
  }
  if (jc_cmd->parsed()) {
    return run_jacobian(jc_input, jc_codec, jc_grid, jc_steps, jc_delta_tilde,
                        jc_out_dir, jc_count);
  }
  if (mt_cmd->parsed()) {
    const ppr::QualityReport q =
        ppr::compare(ppr::read_pgm(mt_ref), ppr::read_pgm(mt_test));
    char buf[96];
    std::snprintf(buf, sizeof buf, "psnr=%g ssim=%g\n", q.psnr, q.ssim);
    std::cout << buf;
    return 0;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ppr::SubprocessError& e) {
    std::cerr << "codec error: " << e.what() << "\n";
    return kExitCodec;
  } catch (const ppr::SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const ppr::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
