#ifndef DOODLE_TOOLS_COMMANDS_HPP
#define DOODLE_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "doodle/arrow_diagram.hpp"
#include "doodle/table_document.hpp"

namespace doodle::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kParseError = 2,
  kSizeGuard = 3,
  kIoError = 4,
};

/// Classification tables are only built for naming when n is at most this.
inline constexpr int kNameTableMaxN = 6;

/// 8 unless DOODLE_MAX_N holds a positive integer.
int default_max_n();

enum class NormalForm { LeftPreferred, LeftCanonical, Unoriented };

int cmd_normalize(const std::string& code_text, NormalForm form, std::ostream& out, std::ostream& err);

int cmd_classify(const std::string& code_text, std::ostream& out, std::ostream& err);

enum class OutputFormat { Json, Csv, Text };

struct EnumerateArgs {
  int n = 0;
  TableView view = TableView::Full;
  OutputFormat format = OutputFormat::Text;
  std::optional<std::string> out_path;
  bool force = false;
};

int cmd_enumerate(const EnumerateArgs& args, std::ostream& out, std::ostream& err);

struct ArrowArgs {
  std::string code_text;
  std::optional<std::string> svg_path;
  std::optional<SymmetryMode> canonical;
};

int cmd_arrow(const ArrowArgs& args, std::ostream& out, std::ostream& err);

int cmd_verify(int n, bool force, std::ostream& out, std::ostream& err);

/// Full command-line entry point: `doodle <subcommand> ...`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace doodle::cli

#endif  // DOODLE_TOOLS_COMMANDS_HPP
