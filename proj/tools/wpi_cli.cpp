#include <iostream>

#include "CLI11.hpp"
#include "wpi/cli.hpp"

int main(int argc, char** argv) {
  wpi::JobSpec job;
  CLI::App app{"Relation Gelfand-Tsetlin modules and Yangian tensor products"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--pyramid", job.pyramid, "pyramid JSON");
    sub->add_option("--relations", job.relations, "relation set JSON");
    sub->add_option("--tableau", job.tableau, "tableau JSON");
    sub->add_option("--weights", job.weights, "weights JSON");
    sub->add_option("--radius", job.radius, "window radius")->capture_default_str();
    sub->add_option("--budget", job.budget, "superscript budget")->capture_default_str();
    sub->add_option("--depth", job.depth, "root-height depth")->capture_default_str();
    sub->add_option("--instantiations", job.instantiations, "generic instantiations")
        ->capture_default_str();
    sub->add_option("--seed", job.seed, "instantiation seed")->capture_default_str();
    sub->add_option("--mode", job.mode, "generic or integral")->capture_default_str();
  };
  for (const char* name : {"check-admissible", "reduce", "enumerate-basis", "verify-relations",
                           "irreducible", "tensor-check"})
    add_common(app.add_subcommand(name));
  auto* rr = app.add_subcommand("rr-remove");
  add_common(rr);
  rr->add_option("--triple", job.triple, "extremal triple k,i,j");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return wpi::kExitInput;
  }
  job.command = app.get_subcommands().front()->get_name();

  auto result = wpi::run(job);
  std::cout << wpi::dump(result.report);
  if (result.report.contains("error"))
    std::cerr << "wpi: " << result.report["error"]["message"].get<std::string>() << "\n";
  return result.exit_code;
}
