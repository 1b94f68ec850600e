#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  using asymk::cli::JobSpec;

  CLI::App app{"Veronese sifting, asymptotic K-polynomials and carries matrices"};
  app.require_subcommand(1);
  JobSpec spec;
  std::string format = "json";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--matrix", spec.matrixPath, "JSON file {\"matrix\": [[...]]}")->required()->check(CLI::ExistingFile);
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--term-cap", spec.limits.termCap, "max terms in an expanded product");
    sub->add_option("--box-cap", spec.limits.latticeBoxCap, "max points in a lattice bounding box");
    sub->add_option("--minor-cap", spec.limits.minorCap, "max square minors for the unimodularity test");
  };
  auto poly = [&](CLI::App* sub) {
    sub->add_option("--poly", spec.polyPath, "polynomial F, default 1")->check(CLI::ExistingFile);
  };

  auto* analyze = app.add_subcommand("analyze", "lattice data, acyclicity, degeneracy, zonotope and blocks");
  common(analyze);
  auto* kpoly = app.add_subcommand("kpoly", "asymptotic K-polynomial and its coefficient sum");
  common(kpoly);
  auto* phi = app.add_subcommand("phi", "Phi_r[F]");
  common(phi);
  poly(phi);
  phi->add_option("--r", spec.r)->required();
  phi->add_option("--method", spec.method, "count or geometric")->check(CLI::IsMember({"count", "geometric"}));
  auto* expand = app.add_subcommand("expand", "series coefficients of F / prod(1 - t^a_j) up to a functional bound");
  common(expand);
  poly(expand);
  expand->add_option("--bound", spec.bound, "cutoff on the positive functional, integer or p/q")->required();
  auto* concavity = app.add_subcommand("concavity", "log- and quasi-concavity of K_A or of --poly");
  common(concavity);
  poly(concavity);
  auto* carries = app.add_subcommand("carries", "carries matrix C(r) and its stochastic properties");
  common(carries);
  carries->add_option("--r", spec.r)->required();
  carries->add_option("--r1", spec.r1, "second r for the eigenvector comparison and semigroup check");
  carries->add_option("--r2", spec.r2, "with --r1, checks C(r1) C(r2) = C(r1 r2)");
  carries->add_option("--order", spec.orderPath, "JSON array fixing the index order")->check(CLI::ExistingFile);
  carries->add_flag("--allow-off-stride", spec.allowOffStride, "permit r not divisible by the lattice index");
  auto* asymptotic = app.add_subcommand("asymptotic", "limit of Phi_r[F] / r^(n-l-d) from an expansion of F");
  common(asymptotic);
  asymptotic->add_option("--expansion", spec.expansionPath)->required()->check(CLI::ExistingFile);
  auto* convergence = app.add_subcommand("convergence", "sampled convergence of Phi_r[F] / r^order");
  common(convergence);
  poly(convergence);
  convergence->add_option("--rmax", spec.rMax)->required();
  convergence->add_option("--expansion", spec.expansionPath, "takes target, order and stride from the expansion")
      ->check(CLI::ExistingFile);
  convergence->add_option("--stride", spec.stride);
  convergence->add_option("--order", spec.order);

  CLI11_PARSE(app, argc, argv);
  spec.command = app.get_subcommands().front()->get_name();
  spec.format = format == "text" ? asymk::cli::Format::Text : asymk::cli::Format::Json;

  auto outcome = asymk::cli::run(spec);
  std::cout << outcome.output;
  return outcome.exitCode;
}
