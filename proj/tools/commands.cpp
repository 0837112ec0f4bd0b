#include "commands.hpp"

#include <chrono>
#include <climits>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "doodle/normal_forms.hpp"
#include "doodle/reducibility.hpp"
#include "doodle/svg.hpp"

namespace doodle::cli {

namespace {

struct Reference {
  Counts counts;
};

// Reference tallies for n = 3 and n = 4.
const std::map<int, Reference> kReference = {
    {3, {Counts{60, 6, 2, 1}}},
    {4, {Counts{840, 124, 32, 19}}},
};

std::optional<GaussCode> parse_or_report(const std::string& text, std::ostream& err) {
  try {
    return parse(text);
  } catch (const CodeError& e) {
    err << "error: " << e.what() << '\n';
    return std::nullopt;
  }
}

std::string orbit_text(const OrientedClassLP& cls) {
  std::string s = "{";
  for (std::size_t i = 0; i < cls.members.size(); ++i) s += (i ? ", " : "") + format(cls.members[i]);
  return s + "}";
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

bool write_file(const std::string& path, const std::string& contents, std::ostream& err) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << path << "' for writing\n";
    return false;
  }
  file << contents;
  file.close();
  if (!file) {
    err << "error: failed writing '" << path << "'\n";
    return false;
  }
  return true;
}

std::string block_text(const std::vector<GaussCode>& block) {
  std::string s = "{";
  for (std::size_t i = 0; i < block.size(); ++i) s += (i ? ", " : "") + format(block[i]);
  return s + "}";
}

/// Reports the first disagreement between two normalized partitions.
bool same_partition(const Partition& gauss, const Partition& arrows, const char* label, std::ostream& out) {
  const std::size_t common = std::min(gauss.size(), arrows.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (gauss[i] != arrows[i]) {
      out << label << ": MISMATCH at block " << i + 1 << "\n  gauss:  " << block_text(gauss[i])
          << "\n  arrows: " << block_text(arrows[i]) << '\n';
      return false;
    }
  }
  if (gauss.size() != arrows.size()) {
    out << label << ": MISMATCH in block count, gauss " << gauss.size() << " vs arrows " << arrows.size() << '\n';
    return false;
  }
  out << label << ": " << gauss.size() << " blocks, agree\n";
  return true;
}

}  // namespace

int default_max_n() {
  if (const char* env = std::getenv("DOODLE_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= INT_MAX) return static_cast<int>(v);
  }
  return EnumerationOptions{}.max_n;
}

int cmd_normalize(const std::string& code_text, NormalForm form, std::ostream& out, std::ostream& err) {
  const auto code = parse_or_report(code_text, err);
  if (!code) return kParseError;
  switch (form) {
    case NormalForm::LeftPreferred: out << format(proj_lp(*code)) << '\n'; break;
    case NormalForm::LeftCanonical: out << format(proj_lc(*code)) << '\n'; break;
    case NormalForm::Unoriented: out << format(g_unori(*code)) << '\n'; break;
  }
  return kOk;
}

int cmd_classify(const std::string& code_text, std::ostream& out, std::ostream& err) {
  const auto code = parse_or_report(code_text, err);
  if (!code) return kParseError;

  const GaussCode lp = proj_lp(*code);
  const bool one = is_1_reducible(*code);
  const bool two = is_2_reducible(*code);
  const bool minimal = !one && !two;
  const LeftPreference pref = left_preference(*code);

  out << "code: " << format(*code) << '\n'
      << "letters: " << format(*code, CodeStyle::Letter) << '\n'
      << "n: " << code->n() << '\n'
      << "left preferred: "
      << (pref == LeftPreference::Full ? "full" : pref == LeftPreference::Weak ? "weak" : "no") << '\n'
      << "1-reducible: " << bool_text(one) << '\n'
      << "2-reducible: " << bool_text(two) << '\n'
      << "minimal: " << bool_text(minimal) << '\n'
      << "G_ori: " << format(proj_lc(*code)) << '\n'
      << "G_unori: " << format(g_unori(*code)) << '\n'
      << "canonical orientation: " << to_string(canonical_orientation(*code)) << '\n'
      << "oriented orbit: " << orbit_text(oriented_class(lp)) << '\n'
      << "reverse orbit: " << orbit_text(oriented_class(rev_lp(lp))) << '\n';

  if (!minimal) {
    out << "class: none (not minimal)\n";
  } else if (code->n() > kNameTableMaxN) {
    out << "class: not tabulated for n > " << kNameTableMaxN << '\n';
  } else {
    const auto table = classify(code->n(), EnumerationOptions{kNameTableMaxN});
    const auto name = table.oriented_name_of(lp);
    out << "class: " << name.value_or("?") << '\n';
    if (name) {
      for (const auto& named : table.oriented_classes) {
        if (named.name == *name) out << "unoriented class: " << table.unoriented_classes[named.unoriented_index].name << '\n';
      }
    }
  }
  return kOk;
}

int cmd_enumerate(const EnumerateArgs& args, std::ostream& out, std::ostream& err) {
  if (args.n < 1) {
    err << "error: n must be a positive integer\n";
    return kParseError;
  }
  EnumerationOptions options;
  options.max_n = args.force ? INT_MAX : default_max_n();
  ClassificationTable table;
  try {
    table = classify(args.n, options);
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << " (pass --force or set DOODLE_MAX_N)\n";
    return kSizeGuard;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kSizeGuard;
  }
  const TableDocument doc = make_document(table);

  std::string rendered;
  switch (args.format) {
    case OutputFormat::Json: rendered = to_json(doc).dump(2) + "\n"; break;
    case OutputFormat::Csv: rendered = to_csv(doc, args.view); break;
    case OutputFormat::Text: rendered = to_text(doc, args.view); break;
  }
  if (args.out_path) return write_file(*args.out_path, rendered, err) ? kOk : kIoError;
  out << rendered;
  return kOk;
}

int cmd_arrow(const ArrowArgs& args, std::ostream& out, std::ostream& err) {
  const auto code = parse_or_report(args.code_text, err);
  if (!code) return kParseError;
  ArrowDiagram diagram = from_code(*code);
  if (args.canonical) diagram = dihedral_canonical(diagram, *args.canonical);
  out << encode(diagram) << '\n';
  if (args.svg_path && !write_file(*args.svg_path, render_svg(diagram), err)) return kIoError;
  return kOk;
}

int cmd_verify(int n, bool force, std::ostream& out, std::ostream& err) {
  if (n < 1) {
    err << "error: n must be a positive integer\n";
    return kParseError;
  }
  EnumerationOptions options;
  options.max_n = force ? INT_MAX : default_max_n();

  ClassificationTable table;
  ArrowClassification arrows;
  try {
    table = classify(n, options);
    arrows = classify_by_arrows(table.minimal_codes, options.threads);
  } catch (const SizeLimitExceeded& e) {
    err << "error: " << e.what() << " (pass --force or set DOODLE_MAX_N)\n";
    return kSizeGuard;
  }

  bool ok = true;
  const Counts got = counts_of(table);
  out << "n = " << n << '\n' << "counts (lp, minimal, oriented, unoriented): " << to_string(got) << '\n';
  if (const auto it = kReference.find(n); it != kReference.end()) {
    const bool match = it->second.counts == got;
    ok &= match;
    out << "reference: " << to_string(it->second.counts) << (match ? " match" : " MISMATCH") << '\n';
  } else {
    out << "reference: no reference\n";
  }

  // Gauss-code minimality against arrow minimality on every left preferred code.
  if (n <= kNameTableMaxN) {
    std::uint64_t checked = 0;
    std::optional<GaussCode> disagreement;
    for_each_lp(n, [&](const GaussCode& w) {
      ++checked;
      if (!disagreement && is_minimal(w) != arrow_minimal(from_code(w))) disagreement = w;
    }, options);
    if (disagreement) {
      ok = false;
      out << "minimality: MISMATCH at " << format(*disagreement) << '\n';
    } else {
      out << "minimality: gauss and arrow tests agree on " << checked << " left preferred codes\n";
    }
  }

  ok &= same_partition(oriented_partition(table), arrows.rotation, "oriented classes vs rotation orbits", out);
  ok &= same_partition(unoriented_partition(table), arrows.dihedral, "unoriented classes vs dihedral orbits", out);
  out << "result: " << (ok ? "OK" : "FAILED") << '\n';
  return ok ? kOk : kMismatch;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical Gauss codes and classification of virtual doodles", "doodle"};
  app.require_subcommand(1);

  auto joined = [](const std::vector<std::string>& parts) {
    std::string s;
    for (const auto& p : parts) s += (s.empty() ? "" : " ") + p;
    return s;
  };

  std::vector<std::string> code_parts;
  int n = 0;
  bool force = false;

  auto* normalize = app.add_subcommand("normalize", "Print a normal form of a Gauss code");
  normalize->add_option("code", code_parts, "Gauss code, letter or numeric form")->required();
  auto* lp_flag = normalize->add_flag("--lp", "Left preferred form");
  auto* lc_flag = normalize->add_flag("--lc", "Left canonical form (default)");
  auto* unori_flag = normalize->add_flag("--unori", "Unoriented left canonical form");
  lp_flag->excludes(lc_flag)->excludes(unori_flag);
  lc_flag->excludes(unori_flag);

  auto* classify_cmd = app.add_subcommand("classify", "Report minimality, invariants and class of a Gauss code");
  classify_cmd->add_option("code", code_parts, "Gauss code, letter or numeric form")->required();

  EnumerateArgs enum_args;
  std::string format_name = "text";
  std::string out_path;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate and classify minimal codes on n letters");
  enumerate->add_option("n", n, "Number of real crossings")->required();
  auto* minimal_flag = enumerate->add_flag("--minimal", "List minimal left preferred codes");
  auto* oriented_flag = enumerate->add_flag("--oriented", "List oriented classes");
  auto* unoriented_flag = enumerate->add_flag("--unoriented", "List unoriented classes");
  minimal_flag->excludes(oriented_flag)->excludes(unoriented_flag);
  oriented_flag->excludes(unoriented_flag);
  enumerate->add_option("--format", format_name, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  enumerate->add_option("--out", out_path, "Write to a file instead of stdout");
  enumerate->add_flag("--force", force, "Bypass the size guard");

  std::string svg_path;
  std::string canonical_name;
  auto* arrow = app.add_subcommand("arrow", "Arrow diagram of a Gauss code");
  arrow->add_option("code", code_parts, "Gauss code, letter or numeric form")->required();
  arrow->add_option("--svg", svg_path, "Write an SVG drawing");
  arrow->add_option("--canonical", canonical_name, "Orbit-canonical form: rot or dihedral")
      ->check(CLI::IsMember({"rot", "dihedral"}));

  auto* verify = app.add_subcommand("verify", "Cross-check Gauss-code and arrow-diagram classifications");
  verify->add_option("n", n, "Number of real crossings")->required();
  verify->add_flag("--force", force, "Bypass the size guard");

  std::vector<const char*> argv{"doodle"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  auto dispatch = [&]() -> int {
    if (normalize->parsed()) {
      NormalForm form = NormalForm::LeftCanonical;
      if (*lp_flag) form = NormalForm::LeftPreferred;
      if (*unori_flag) form = NormalForm::Unoriented;
      return cmd_normalize(joined(code_parts), form, out, err);
    }
    if (classify_cmd->parsed()) return cmd_classify(joined(code_parts), out, err);
    if (enumerate->parsed()) {
      enum_args.n = n;
      enum_args.force = force;
      if (*minimal_flag) enum_args.view = TableView::Minimal;
      if (*oriented_flag) enum_args.view = TableView::Oriented;
      if (*unoriented_flag) enum_args.view = TableView::Unoriented;
      enum_args.format = format_name == "json" ? OutputFormat::Json
                         : format_name == "csv" ? OutputFormat::Csv
                                                : OutputFormat::Text;
      if (!out_path.empty()) enum_args.out_path = out_path;
      return cmd_enumerate(enum_args, out, err);
    }
    if (arrow->parsed()) {
      ArrowArgs arrow_args{joined(code_parts), std::nullopt, std::nullopt};
      if (!svg_path.empty()) arrow_args.svg_path = svg_path;
      if (canonical_name == "rot") arrow_args.canonical = SymmetryMode::RotationOnly;
      if (canonical_name == "dihedral") arrow_args.canonical = SymmetryMode::RotationAndReflection;
      return cmd_arrow(arrow_args, out, err);
    }
    if (verify->parsed()) return cmd_verify(n, force, out, err);
    return kParseError;
  };
  try {
    return dispatch();
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kMismatch;
  }
}

}  // namespace doodle::cli
