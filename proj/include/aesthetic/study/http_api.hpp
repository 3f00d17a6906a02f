#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aesthetic/image/standard_image.hpp"
#include "aesthetic/study/service.hpp"

namespace aesthetic::study {

/// Resolves image ids to PNG/JPEG files (by stem) inside one directory.
class ImageDirectory {
 public:
  explicit ImageDirectory(std::filesystem::path directory);

  std::optional<std::filesystem::path> find(const std::string& imageId) const;
  /// Standardized 200x200 PNG bytes; nullopt when no file matches.
  std::optional<std::vector<std::uint8_t>> pngFor(const std::string& imageId) const;

 private:
  std::filesystem::path directory_;
};

/// JSON-over-HTTP front end for StudyService.
///
///   POST /api/users                      {name} -> 201 {userId}
///   GET  /api/users/{id}/ratings         -> {color: 0..1}
///   POST /api/users/{id}/ratings         {color: 0..10, all twelve} -> 204
///   GET  /api/colors                     -> [{name, rgb}]
///   GET  /api/images                     -> [{imageId, url}]
///   GET  /api/images/{id}                -> image/png, 200x200
///   GET  /api/images/{id}/features       -> feature row and dominant colors
///   POST /api/studies                    {imageIds, userIds, seed?} -> 201 {studyId, seed, trialPlan}
///   GET  /api/studies/{id}/next?user=    -> {done, pair, leftImage, rightImage, index, total}
///   POST /api/studies/{id}/trials        {userId, pair, choice} -> {hit}
///   GET  /api/studies/{id}/report        -> per-user and pooled hit rates
///
/// Errors are {"error": message} with 400 (bad input), 404 (unknown id),
/// 409 (duplicate trial or user) or 500.
class StudyHttpServer {
 public:
  StudyHttpServer(StudyService& service, std::optional<ImageDirectory> images);
  ~StudyHttpServer();

  StudyHttpServer(const StudyHttpServer&) = delete;
  StudyHttpServer& operator=(const StudyHttpServer&) = delete;

  /// Returns the bound port, or -1 on failure.
  int bindToAnyPort(const std::string& host = "127.0.0.1");
  bool bind(const std::string& host, int port);
  /// Blocks until stop() is called.
  bool listenAfterBind();
  void stop();
  void waitUntilReady() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace aesthetic::study
