// Runs one session in-process and prints the final response payload as JSON.
//
//   sentifiers_cli --dataset nations --utterance "which countries are struggling?" \
//       --set-range lifeExpectancy 40 60 --add population

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "sentifiers/errors.hpp"
#include "sentifiers/interpreter.hpp"
#include "sentifiers/wire.hpp"

using namespace sentifiers;
namespace fs = std::filesystem;

int main(int argc, char** argv) {
  CLI::App app{"sentifiers command-line interpreter"};
  ResourcePaths paths = ResourcePaths::shipped(SENTIFIERS_DATA_DIR);
  std::string dataset;
  std::string utterance;
  std::vector<std::string> set_range;
  std::vector<std::string> add;
  std::vector<std::string> remove;
  bool compact = false;
  bool interpretation_only = false;

  app.add_option("--dataset", dataset, "CSV path, or the name of a shipped dataset")->required();
  app.add_option("--utterance,-u", utterance)->required();
  app.add_option("--set-range", set_range, "ATTRIBUTE LO HI")->expected(3);
  app.add_option("--add", add);
  app.add_option("--remove", remove);
  app.add_option("--corpus", paths.corpus);
  app.add_option("--sentiment-lexicon", paths.sentiment_lexicon);
  app.add_option("--pos-lexicon", paths.pos_lexicon);
  app.add_option("--numeric-gradable-lexicon", paths.numeric_gradable_lexicon);
  app.add_option("--domain-registry", paths.domain_registry);
  app.add_flag("--compact", compact);
  app.add_flag("--interpretation-only", interpretation_only);
  CLI11_PARSE(app, argc, argv);

  try {
    fs::path csv = dataset;
    if (!fs::exists(csv)) csv = fs::path(SENTIFIERS_DATA_DIR) / "datasets" / (dataset + ".csv");
    auto data = std::make_shared<const Dataset>(load_dataset_file(csv));
    const Interpreter engine(load_resources(paths));
    Session session("cli", data);
    auto result = engine.interpret(utterance, session);
    if (!set_range.empty()) {
      result = engine.refine_range(session, set_range[0], std::stod(set_range[1]), std::stod(set_range[2]));
    }
    for (const auto& a : add) result = engine.add_attribute(session, a);
    for (const auto& a : remove) result = engine.remove_attribute(session, a);

    const auto out = interpretation_only ? wire::to_json(result) : wire::response_payload(result, *data);
    std::cout << (compact ? out.dump() : out.dump(2)) << "\n";
  } catch (const Error& e) {
    std::cerr << e.message() << "\n" << e.detail() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
