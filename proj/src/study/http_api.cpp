#include "aesthetic/study/http_api.hpp"

#include <httplib.h>
#include <json.hpp>

#include "aesthetic/color/basic_color.hpp"
#include "aesthetic/errors.hpp"
#include "aesthetic/store/corpus.hpp"

namespace aesthetic::study {

using nlohmann::json;

namespace {

constexpr const char* kJson = "application/json";

void sendJson(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

void sendError(httplib::Response& res, int status, const std::string& message) {
  sendJson(res, status, {{"error", message}});
}

json parseBody(const httplib::Request& req) {
  try {
    return json::parse(req.body);
  } catch (const json::parse_error&) {
    throw ArgumentError("request body is not valid JSON");
  }
}

// Maps domain exceptions onto status codes.
template <typename Fn>
httplib::Server::Handler guarded(Fn fn) {
  return [fn = std::move(fn)](const httplib::Request& req, httplib::Response& res) {
    try {
      fn(req, res);
    } catch (const ArgumentError& e) {
      sendError(res, 400, e.what());
    } catch (const json::exception& e) {
      sendError(res, 400, e.what());
    } catch (const LookupError& e) {
      sendError(res, 404, e.what());
    } catch (const ConflictError& e) {
      sendError(res, 409, e.what());
    } catch (const std::exception& e) {
      sendError(res, 500, e.what());
    }
  };
}

json pairJson(const ImagePair& pair) { return json::array({pair.first, pair.second}); }

json featuresJson(const scoring::ScoredRow& row, const store::Corpus& corpus) {
  json colors = json::array();
  if (auto it = corpus.colors.find(row.imageId); it != corpus.colors.end()) {
    for (const auto& entry : it->second.entries()) {
      colors.push_back({{"color", std::string(color::name(entry.color))}, {"pixels", entry.pixels}});
    }
  }
  return {{"imageId", row.imageId},
          {"likes", row.likes},
          {"colorHarmony", row.raw.colorHarmony},
          {"lightness", row.raw.lightness},
          {"complexity", row.raw.complexity},
          {"normalized",
           {{"colorHarmony", row.normalized.colorHarmony},
            {"lightness", row.normalized.lightness},
            {"complexity", row.normalized.complexity},
            {"simplicity", row.normalized.simplicity}}},
          {"aestheticScore", row.aestheticScore},
          {"dominantColors", colors}};
}

}  // namespace

ImageDirectory::ImageDirectory(std::filesystem::path directory) : directory_(std::move(directory)) {}

std::optional<std::filesystem::path> ImageDirectory::find(const std::string& imageId) const {
  if (!store::isValidImageId(imageId)) return std::nullopt;
  for (const char* ext : {".png", ".jpg", ".jpeg", ".PNG", ".JPG", ".JPEG"}) {
    auto candidate = directory_ / (imageId + ext);
    if (std::filesystem::is_regular_file(candidate)) return candidate;
  }
  return std::nullopt;
}

std::optional<std::vector<std::uint8_t>> ImageDirectory::pngFor(const std::string& imageId) const {
  const auto path = find(imageId);
  if (!path) return std::nullopt;
  return image::encodePng(image::loadAndStandardize(*path));
}

struct StudyHttpServer::Impl {
  StudyService& service;
  std::optional<ImageDirectory> images;
  httplib::Server server;

  Impl(StudyService& s, std::optional<ImageDirectory> dir) : service(s), images(std::move(dir)) { routes(); }

  void routes() {
    server.Post("/api/users", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const auto body = parseBody(req);
      sendJson(res, 201, {{"userId", service.createUser(body.at("name").get<std::string>())}});
    }));

    server.Get("/api/users/:id/ratings", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const auto profile = service.profile(req.path_params.at("id"));
      if (!profile) throw LookupError("user has not submitted ratings");
      json out = json::object();
      for (auto c : color::kAllBasicColors) out[std::string(color::name(c))] = profile->rating(c);
      sendJson(res, 200, out);
    }));

    server.Post("/api/users/:id/ratings", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const auto body = parseBody(req);
      if (!body.is_object()) throw ArgumentError("ratings must be an object of color -> 0..10");
      std::map<std::string, double> sliders;
      for (const auto& [name, value] : body.items()) {
        if (!value.is_number()) throw ArgumentError("rating for '" + name + "' must be a number");
        sliders.emplace(name, value.get<double>());
      }
      service.submitRatings(req.path_params.at("id"), sliders);
      res.status = 204;
    }));

    server.Get("/api/colors", guarded([](const httplib::Request&, httplib::Response& res) {
      json out = json::array();
      for (auto c : color::kAllBasicColors) {
        const auto rgb = color::referenceRgb(c);
        out.push_back({{"name", std::string(color::name(c))}, {"rgb", {rgb.r, rgb.g, rgb.b}}});
      }
      sendJson(res, 200, out);
    }));

    server.Get("/api/images", guarded([this](const httplib::Request&, httplib::Response& res) {
      json out = json::array();
      for (const auto& row : service.corpus().table.rows()) {
        out.push_back({{"imageId", row.imageId}, {"url", "/api/images/" + row.imageId}});
      }
      sendJson(res, 200, out);
    }));

    server.Get("/api/images/:id", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const auto& id = req.path_params.at("id");
      service.corpus().table.at(id);
      auto png = images ? images->pngFor(id) : std::nullopt;
      if (!png) throw LookupError("no image file for '" + id + "'");
      res.status = 200;
      res.set_content(std::string(png->begin(), png->end()), "image/png");
    }));

    server.Get("/api/images/:id/features", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const auto& corpus = service.corpus();
      sendJson(res, 200, featuresJson(corpus.table.at(req.path_params.at("id")), corpus));
    }));

    server.Post("/api/studies", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const auto body = parseBody(req);
      std::optional<std::uint64_t> seed;
      if (body.contains("seed")) seed = body.at("seed").get<std::uint64_t>();
      const auto study = service.createStudy(body.at("imageIds").get<std::vector<std::string>>(),
                                             body.at("userIds").get<std::vector<std::string>>(), seed);
      auto doc = toJson(study, /*includePredictions=*/false);
      json out = {{"studyId", study.studyId},
                  {"seed", study.seed},
                  {"imageIds", study.imageIds},
                  {"userIds", study.userIds},
                  {"trialPlan", doc.at("plan")}};
      sendJson(res, 201, out);
    }));

    server.Get("/api/studies/:id/next", guarded([this](const httplib::Request& req, httplib::Response& res) {
      if (!req.has_param("user")) throw ArgumentError("missing 'user' query parameter");
      const auto next = service.nextTrial(req.path_params.at("id"), req.get_param_value("user"));
      if (!next) {
        sendJson(res, 200, {{"done", true}});
        return;
      }
      sendJson(res, 200,
               {{"done", false},
                {"index", next->index},
                {"total", next->total},
                {"pair", pairJson(next->pair)},
                {"leftImage", next->left},
                {"rightImage", next->right}});
    }));

    server.Post("/api/studies/:id/trials", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const auto body = parseBody(req);
      const auto& pair = body.at("pair");
      if (!pair.is_array() || pair.size() != 2) throw ArgumentError("pair must be a two-element array");
      const auto trial =
          service.recordTrial(req.path_params.at("id"), body.at("userId").get<std::string>(),
                              makePair(pair[0].get<std::string>(), pair[1].get<std::string>()),
                              body.at("choice").get<std::string>());
      sendJson(res, 200, {{"hit", trial.hit}});
    }));

    server.Get("/api/studies/:id/report", guarded([this](const httplib::Request& req, httplib::Response& res) {
      sendJson(res, 200, toJson(service.report(req.path_params.at("id"))));
    }));
  }
};

StudyHttpServer::StudyHttpServer(StudyService& service, std::optional<ImageDirectory> images)
    : impl_(std::make_unique<Impl>(service, std::move(images))) {}

StudyHttpServer::~StudyHttpServer() { stop(); }

int StudyHttpServer::bindToAnyPort(const std::string& host) { return impl_->server.bind_to_any_port(host); }

bool StudyHttpServer::bind(const std::string& host, int port) { return impl_->server.bind_to_port(host, port); }

bool StudyHttpServer::listenAfterBind() { return impl_->server.listen_after_bind(); }

void StudyHttpServer::stop() {
  if (impl_) impl_->server.stop();
}

void StudyHttpServer::waitUntilReady() const { impl_->server.wait_until_ready(); }

}  // namespace aesthetic::study
