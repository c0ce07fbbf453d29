#include <CLI11.hpp>
#include <httplib.h>

#include <filesystem>
#include <iostream>

#include "sentifiers/api_service.hpp"
#include "sentifiers/errors.hpp"

using namespace sentifiers;
namespace fs = std::filesystem;

int main(int argc, char** argv) {
  CLI::App app{"sentifiers HTTP API"};
  const auto defaults = ResourcePaths::shipped(SENTIFIERS_DATA_DIR);
  ResourcePaths paths = defaults;
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string datasets = (fs::path(SENTIFIERS_DATA_DIR) / "datasets").string();
  std::string cors = "*";
  int ttl_minutes = 60;

  app.add_option("--port", port)->envname("SENTIFIERS_PORT")->capture_default_str();
  app.add_option("--host", host)->envname("SENTIFIERS_HOST")->capture_default_str();
  app.add_option("--corpus", paths.corpus)->envname("SENTIFIERS_CORPUS");
  app.add_option("--sentiment-lexicon", paths.sentiment_lexicon)->envname("SENTIFIERS_SENTIMENT_LEXICON");
  app.add_option("--pos-lexicon", paths.pos_lexicon)->envname("SENTIFIERS_POS_LEXICON");
  app.add_option("--numeric-gradable-lexicon", paths.numeric_gradable_lexicon)
      ->envname("SENTIFIERS_NUMERIC_GRADABLE_LEXICON");
  app.add_option("--domain-registry", paths.domain_registry)->envname("SENTIFIERS_DOMAIN_REGISTRY");
  app.add_option("--datasets", datasets, "directory of CSV files to preload")
      ->envname("SENTIFIERS_DATASETS")
      ->capture_default_str();
  app.add_option("--cors-origin", cors)->envname("SENTIFIERS_CORS_ORIGIN")->capture_default_str();
  app.add_option("--session-ttl-minutes", ttl_minutes)->envname("SENTIFIERS_SESSION_TTL")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  try {
    ApiConfig config;
    config.cors_origin = cors;
    config.session_ttl = std::chrono::minutes(ttl_minutes);
    ApiService service(load_resources(paths), config);

    if (!datasets.empty() && fs::is_directory(datasets)) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(datasets)) {
        if (entry.path().extension() == ".csv") files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      for (const auto& f : files) {
        service.register_dataset(load_dataset_file(f));
        std::cerr << "loaded dataset " << f.stem().string() << "\n";
      }
    }

    httplib::Server server;
    service.bind(server);
    std::cerr << "listening on " << host << ":" << port << "\n";
    if (!server.listen(host, port)) {
      std::cerr << "could not bind " << host << ":" << port << "\n";
      return 1;
    }
  } catch (const Error& e) {
    std::cerr << e.message() << " (" << e.detail() << ")\n";
    return 1;
  }
  return 0;
}
