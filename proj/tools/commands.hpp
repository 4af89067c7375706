#pragma once

#include <optional>
#include <string>

#include "nearadd/generate.hpp"
#include "nearadd/verifier.hpp"

namespace nearadd::cli {

enum ExitCode : int { kPass = 0, kCheckFailure = 1, kConfigError = 2, kProtocolError = 3 };

struct GraphSource {
  std::string file;
  GeneratorSpec generator;
  std::string p_text = "1/10";
};

struct ScheduleArgs {
  int kappa = 0;
  int c = 0;
  std::string mode = "guaranteed";
  std::string eps;
};

struct Outputs {
  std::string spanner;
  std::string trace;
  std::string report;
  bool verbose_trace = false;
};

struct EngineArgs {
  unsigned workers = 1;
  bool verify_replay = false;
};

int cmd_generate(const GraphSource& source, const std::string& out);
int cmd_build(const GraphSource& source, const ScheduleArgs& schedule, const EngineArgs& engine, const Outputs& out);
int cmd_verify(const GraphSource& source, const ScheduleArgs& schedule, const std::string& spanner_file,
               const VerifyOptions& verify, const EngineArgs& engine, const Outputs& out);
int cmd_report(const std::string& report_file);
int cmd_run(const GraphSource& source, const ScheduleArgs& schedule, const VerifyOptions& verify,
            const EngineArgs& engine, const Outputs& out);

}  // namespace nearadd::cli
