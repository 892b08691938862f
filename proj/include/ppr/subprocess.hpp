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

#ifndef PPR_SUBPROCESS_HPP
#define PPR_SUBPROCESS_HPP

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>

#include "ppr/codec.hpp"

namespace ppr {

class SubprocessError : public std::runtime_error {
 public:
  enum class Kind {
    spawn_failure,   // the command could not be started
    nonzero_exit,    // the command reported failure
    timeout,         // the command was killed after the deadline
    bad_output,      // missing or unparsable output file
    shape_mismatch,  // output dimensions differ from the input
  };

  SubprocessError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Runs `command` through /bin/sh -c in `workdir` (empty = current directory).
// Returns the exit status; throws SubprocessError on spawn failure or when
// the timeout elapses (the process group is killed first).
int run_command(const std::string& command, const std::filesystem::path& workdir,
                double timeout_seconds);

// Replaces every "{key}" in the template with its value.
std::string substitute_placeholders(const std::string& command_template,
                                    const std::map<std::string, std::string>& values);

// Directory for the adapter's temp files: $PPR_TMPDIR when set, otherwise the
// system temp directory.
std::filesystem::path adapter_temp_dir();

// Creates a unique file path under adapter_temp_dir(); safe for concurrent
// calls from multiple threads or processes.
std::filesystem::path unique_temp_path(const std::string& suffix);

// Codec backed by an external command. The input image is written as binary
// PGM to a fresh temp file, {in}/{out} are substituted into the template, the
// command runs, and the output PGM is read back. Temp files are always
// deleted. Note the PGM round-trip rounds samples to 8-bit integers.
class SubprocessCodec : public Codec {
 public:
  explicit SubprocessCodec(std::string command_template,
                           std::filesystem::path workdir = {},
                           double timeout_seconds = 60.0);

  ImageBuffer apply(const ImageBuffer& x) const override;
  std::string descriptor() const override;

 private:
  std::string command_template_;
  std::filesystem::path workdir_;
  double timeout_seconds_;
};

}  // namespace ppr

#endif  // PPR_SUBPROCESS_HPP
