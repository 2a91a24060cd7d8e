#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "job.hpp"

namespace {

using chern::cli::Job;
using chern::cli::Json;

enum Exit { kOk = 0, kInternal = 1, kParse = 2, kNotStabilized = 3, kUnsupported = 4, kResource = 6 };

void add_common(CLI::App* sub, Job& job) {
  sub->add_option("--ring", job.ring, "ring, e.g. \"Q[x,y,z] grevlex\"");
  sub->add_option("--ideal", job.ideal, "generator list, or \"(..) cap (..)\"");
  sub->add_option("--module", job.module, "defining ideal J of M = S/J");
  sub->add_option("--order", job.order, "grevlex or lex")->check(CLI::IsMember({"grevlex", "lex"}));
  sub->add_option("--field", job.field, "Q or F<p>");
  sub->add_option("--nmax", job.nmax, "initial series length")->check(CLI::Range(1u, 4096u));
  sub->add_option("--samples", job.samples, "number of sampled parameter ideals");
  sub->add_option("--seed", job.seed, "sampling seed");
  sub->add_option("--degree", job.degree, "degree of sampled parameters")->check(CLI::IsMember({1u, 2u}));
  sub->add_flag("--json", job.json, "machine-readable output");
  sub->add_option("--out", job.out, "write the document to FILE");
  sub->add_option("--example-1", job.example_1, "Example 1 ring with parameter d");
  sub->add_option_function<std::string>(
      "--example-2",
      [&job](const std::string& text) {
        auto comma = text.find(',');
        if (comma == std::string::npos) throw CLI::ValidationError("--example-2", "expected a,b");
        try {
          job.example_2 = std::make_pair(static_cast<unsigned>(std::stoul(text.substr(0, comma))),
                                         static_cast<unsigned>(std::stoul(text.substr(comma + 1))));
        } catch (const std::exception&) {
          throw CLI::ValidationError("--example-2", "expected a,b");
        }
      },
      "Example 2 ring with parameters a,b");
}

int emit(const Job& job, Json doc) {
  const std::string text = job.json ? doc.dump() + "\n" : chern::cli::render_text(doc);
  if (job.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(job.out);
  if (!file) {
    std::cerr << "error: cannot write " << job.out << "\n";
    return kInternal;
  }
  file << text;
  return 0;
}

Json document(const Job& job) {
  return Json{{"schema", chern::cli::kSchema},
              {"tool", "chernlab"},
              {"version", chern::cli::kVersion},
              {"job", job.echo()}};
}

int fail(const Job& job, Json doc, const std::string& kind, const std::string& message, int code) {
  std::cerr << "error: " << message << "\n";
  doc["status"] = "error";
  doc["error"] = Json{{"kind", kind}, {"message", message}, {"exit_status", code}};
  emit(job, std::move(doc));
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert, Chern and irreducible coefficients of graded quotient rings"};
  app.set_version_flag("--version", chern::cli::kVersion);
  app.require_subcommand(1);
  Job job;

  using Handler = Json (*)(const Job&);
  const std::map<std::string, std::pair<std::string, Handler>> commands{
      {"gb", {"reduced Groebner basis of an ideal", chern::cli::cmd_gb}},
      {"invariants", {"dimension, Hilbert and irreducible coefficients, socle, H^0", chern::cli::cmd_invariants}},
      {"decompose", {"irreducible and primary decomposition of a monomial ideal", chern::cli::cmd_decompose}},
      {"check", {"Cohen-Macaulay test and theorem report", chern::cli::cmd_check}},
      {"verify-paper", {"reproduce the worked examples", chern::cli::cmd_verify_paper}},
  };
  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.first);
    add_common(sub, job);
    if (name == "verify-paper") {
      sub->add_option("--example", job.example, "1 or 2")->required()->check(CLI::IsMember({1u, 2u}));
      sub->add_option("--d", job.d, "Example 1 dimension");
      sub->add_option("--a", job.a, "Example 2 exponent a");
      sub->add_option("--b", job.b, "Example 2 exponent b");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }
  job.command = app.get_subcommands().front()->get_name();
  const Handler handler = commands.at(job.command).second;

  Json doc = document(job);
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
        .count();
  };
  try {
    Json result = handler(job);
    doc["status"] = "ok";
    doc["result"] = std::move(result);
    doc["timing_ms"] = elapsed();
    return emit(job, std::move(doc));
  } catch (const chern::cli::CommandFailure& e) {
    doc["result"] = e.result();
    doc["timing_ms"] = elapsed();
    return fail(job, std::move(doc), e.exit_code() == 5 ? "assertion" : "not-stabilized", e.what(),
                e.exit_code());
  } catch (const chern::ParseError& e) {
    return fail(job, std::move(doc), "parse", e.what(), kParse);
  } catch (const chern::PreconditionError& e) {
    return fail(job, std::move(doc), "precondition", e.what(), kParse);
  } catch (const chern::RingMismatch& e) {
    return fail(job, std::move(doc), "precondition", e.what(), kParse);
  } catch (const chern::NotStabilized& e) {
    return fail(job, std::move(doc), "not-stabilized", e.what(), kNotStabilized);
  } catch (const chern::Unsupported& e) {
    return fail(job, std::move(doc), "unsupported", e.what(), kUnsupported);
  } catch (const chern::ResourceLimit& e) {
    return fail(job, std::move(doc), "resource-limit", e.what(), kResource);
  } catch (const std::exception& e) {
    return fail(job, std::move(doc), "internal", e.what(), kInternal);
  }
}
