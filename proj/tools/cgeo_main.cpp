// cgeo: exact symbolic checker for contact metric structures and their
// canonical connections (Levi-Civita, Tanaka-Webster, tilde, bi-Legendrian,
// bi-Lagrangian).

#include <iostream>

#include <CLI11.hpp>

#include "cgeo/cli.hpp"
#include "cgeo/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact contact-metric connection checker"};
  app.require_subcommand(1);

  cgeo::CommandRequest req;
  auto add_common = [&](CLI::App* cmd, bool subject_needed) {
    if (subject_needed) {
      cmd->add_option("--catalog", req.catalog_id, "built-in catalog id");
      cmd->add_option("--manifest", req.manifest_path, "path to a manifest JSON file");
    }
    cmd->add_option("--format", req.format, "report format: json|text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--max-witness-len", req.max_witness_len,
                    "truncate witnesses beyond this length");
  };

  CLI::App* validate = app.add_subcommand("validate", "check the structure axioms");
  add_common(validate, true);

  CLI::App* classify = app.add_subcommand("classify", "classify the declared distributions");
  add_common(classify, true);

  CLI::App* connection =
      app.add_subcommand("connection", "construct a connection and print its table");
  add_common(connection, true);
  connection->add_option("--connection", req.connection, "lc|tw|tilde|bl");

  CLI::App* check = app.add_subcommand("check", "run a named theorem suite");
  add_common(check, true);
  check->add_option("--suite", req.suite,
                    "tanno|bilegendrian|metric-equiv|coincidence|tilde-theorem|appendix");
  check->add_option("--connection", req.connection, "connection for tanno/bilegendrian");

  CLI::App* compare = app.add_subcommand("compare", "difference tensor of two connections");
  add_common(compare, true);
  compare->add_option("--connection", req.connection, "first connection (default bl)");
  compare->add_option("--with", req.with_connection, "second connection (default tw)");

  CLI::App* exp = app.add_subcommand("export", "write a catalog entry as a manifest");
  add_common(exp, true);

  CLI11_PARSE(app, argc, argv);
  req.command = app.get_subcommands().front()->get_name();

  try {
    cgeo::CommandResult result = cgeo::run_command(req);
    if (result.document) {
      std::cout << result.document->dump(2) << "\n";
      return 0;
    }
    std::cout << cgeo::emit_report(result.report, req.format, req.max_witness_len);
    return result.report.exit_code();
  } catch (const cgeo::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const cgeo::DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
