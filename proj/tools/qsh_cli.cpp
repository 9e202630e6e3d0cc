#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qsh/jobs.hpp"

using qsh::jobs::json;

namespace {

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Flag values are JSON when they parse as JSON and plain strings otherwise,
// so --k 1, --blocks [1,2] and --quiver A2 all do what they look like.
json flag_value(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error&) {
    return json(text);
  }
}

std::string flag_name(std::string key) {
  for (char& c : key)
    if (c == '_') c = '-';
  return "--" + key;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shuffle-algebra products and Yangian relation checks over exact rational functions."};
  app.require_subcommand(1);
  bool compact = false;
  app.add_flag("--compact", compact, "Print JSON on one line");

  std::string input_path = "-";
  auto* run = app.add_subcommand("run", "Run a JSON job or an array of jobs");
  run->add_option("file", input_path, "Job file, or - for stdin");
  run->fallthrough();

  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::vector<std::string>> substitutions;
  std::map<std::string, CLI::App*> commands;
  for (const auto& [command, keys] : qsh::jobs::command_keys()) {
    auto* sub = app.add_subcommand(command, "Run a single '" + command + "' job");
    sub->fallthrough();
    commands[command] = sub;
    for (const auto& key : keys) {
      if (key == "substitute")
        sub->add_option("--substitute", substitutions[command], "name=expr, repeatable");
      else
        sub->add_option(flag_name(key), values[command][key]);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qsh::jobs::Malformed;
  }

  qsh::jobs::Result result;
  if (run->parsed()) {
    std::string text;
    if (input_path == "-") {
      text = read_all(std::cin);
    } else {
      std::ifstream in(input_path);
      if (!in) {
        std::cerr << "cannot open " << input_path << "\n";
        return qsh::jobs::Malformed;
      }
      text = read_all(in);
    }
    result = qsh::jobs::run_text(text);
  } else {
    for (const auto& [command, sub] : commands) {
      if (!sub->parsed()) continue;
      json job{{"command", command}};
      for (const auto& [key, value] : values[command])
        if (sub->count(flag_name(key))) job[key] = flag_value(value);
      if (!substitutions[command].empty()) job["substitute"] = substitutions[command];
      result = qsh::jobs::run(job);
    }
  }
  std::cout << (compact ? result.output.dump() : result.output.dump(2)) << "\n";
  return result.exit_code;
}
