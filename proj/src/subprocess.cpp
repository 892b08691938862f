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

#include "ppr/subprocess.hpp"

#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cerrno>
#include <chrono>
#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <random>
#include <thread>

#include "ppr/io.hpp"

namespace ppr {

int run_command(const std::string& command, const std::filesystem::path& workdir,
                double timeout_seconds) {
  const pid_t pid = ::fork();
  if (pid < 0) {
    throw SubprocessError(SubprocessError::Kind::spawn_failure,
                          "fork failed: " + std::string(std::strerror(errno)));
  }
  if (pid == 0) {
    // child: own process group so a timeout can kill the whole pipeline
    ::setpgid(0, 0);
    if (!workdir.empty() && ::chdir(workdir.c_str()) != 0) _exit(127);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }

  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration<double>(timeout_seconds);
  int status = 0;
  for (;;) {
    const pid_t done = ::waitpid(pid, &status, WNOHANG);
    if (done == pid) break;
    if (done < 0) {
      throw SubprocessError(SubprocessError::Kind::spawn_failure,
                            "waitpid failed: " + std::string(std::strerror(errno)));
    }
    if (std::chrono::steady_clock::now() >= deadline) {
      ::kill(-pid, SIGKILL);
      ::waitpid(pid, &status, 0);
      throw SubprocessError(SubprocessError::Kind::timeout,
                            "command timed out after " +
                                std::to_string(timeout_seconds) + "s: " + command);
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(2));
  }
  if (WIFSIGNALED(status)) return 128 + WTERMSIG(status);
  return WEXITSTATUS(status);
}

std::string substitute_placeholders(const std::string& command_template,
                                    const std::map<std::string, std::string>& values) {
  std::string out = command_template;
  for (const auto& [key, value] : values) {
    const std::string token = "{" + key + "}";
    std::size_t pos = 0;
    while ((pos = out.find(token, pos)) != std::string::npos) {
      out.replace(pos, token.size(), value);
      pos += value.size();
    }
  }
  return out;
}

std::filesystem::path adapter_temp_dir() {
  if (const char* env = std::getenv("PPR_TMPDIR"); env && *env) {
    return env;
  }
  return std::filesystem::temp_directory_path();
}

std::filesystem::path unique_temp_path(const std::string& suffix) {
  static std::atomic<unsigned long> counter{0};
  static const unsigned long seed = std::random_device{}();
  char name[96];
  std::snprintf(name, sizeof name, "ppr-%ld-%lx-%lu%s", static_cast<long>(::getpid()),
                seed, counter.fetch_add(1), suffix.c_str());
  return adapter_temp_dir() / name;
}

namespace {

struct TempFileGuard {
  std::filesystem::path path;
  ~TempFileGuard() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }
};

}  // namespace

SubprocessCodec::SubprocessCodec(std::string command_template,
                                 std::filesystem::path workdir, double timeout_seconds)
    : command_template_(std::move(command_template)),
      workdir_(std::move(workdir)),
      timeout_seconds_(timeout_seconds) {
  if (command_template_.find("{in}") == std::string::npos ||
      command_template_.find("{out}") == std::string::npos) {
    throw std::invalid_argument("SubprocessCodec: template needs {in} and {out}");
  }
  if (!(timeout_seconds > 0.0)) {
    throw std::invalid_argument("SubprocessCodec: timeout must be positive");
  }
}

ImageBuffer SubprocessCodec::apply(const ImageBuffer& x) const {
  TempFileGuard in{unique_temp_path("-in.pgm")};
  TempFileGuard out{unique_temp_path("-out.pgm")};
  write_pgm(x, in.path);

  const std::string cmd = substitute_placeholders(
      command_template_, {{"in", in.path.string()}, {"out", out.path.string()}});
  const int status = run_command(cmd, workdir_, timeout_seconds_);
  if (status != 0) {
    throw SubprocessError(SubprocessError::Kind::nonzero_exit,
                          "codec command exited with status " +
                              std::to_string(status) + ": " + cmd);
  }

  ImageBuffer result = [&] {
    try {
      return read_pgm(out.path);
    } catch (const IoError& e) {
      throw SubprocessError(SubprocessError::Kind::bad_output,
                            "codec output unreadable: " + std::string(e.what()));
    }
  }();
  if (!result.same_shape(x)) {
    throw SubprocessError(SubprocessError::Kind::shape_mismatch,
                          "codec changed image dimensions");
  }
  return result;
}

std::string SubprocessCodec::descriptor() const {
  return "subprocess \"" + command_template_ + "\"";
}

}  // namespace ppr
