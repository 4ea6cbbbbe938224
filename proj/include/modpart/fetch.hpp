#pragma once

// Download of OEIS b-files. Requires linking libcurl; not part of modpart.hpp.

#include <stdexcept>
#include <string>

#include <curl/curl.h>

namespace modpart {

namespace detail {

inline std::size_t append_body(char* data, std::size_t size, std::size_t count, void* user) {
  static_cast<std::string*>(user)->append(data, size * count);
  return size * count;
}

} // namespace detail

inline std::string bfile_url(const std::string& id) {
  if (id.size() < 2 || id[0] != 'A') throw std::invalid_argument("sequence id must look like A011796");
  return "https://oeis.org/" + id + "/b" + id.substr(1) + ".txt";
}

/// Plain HTTPS GET of the b-file for `id`; throws std::runtime_error on any
/// network or HTTP failure.
inline std::string fetch_bfile(const std::string& id, long timeout_seconds = 60) {
  const std::string url = bfile_url(id);
  CURL* curl = curl_easy_init();
  if (!curl) throw std::runtime_error("fetch: could not initialise libcurl");
  std::string body;
  curl_easy_setopt(curl, CURLOPT_URL, url.c_str());
  curl_easy_setopt(curl, CURLOPT_FOLLOWLOCATION, 1L);
  curl_easy_setopt(curl, CURLOPT_FAILONERROR, 1L);
  curl_easy_setopt(curl, CURLOPT_TIMEOUT, timeout_seconds);
  curl_easy_setopt(curl, CURLOPT_USERAGENT, "modpart/0.1");
  curl_easy_setopt(curl, CURLOPT_WRITEFUNCTION, detail::append_body);
  curl_easy_setopt(curl, CURLOPT_WRITEDATA, &body);
  const CURLcode rc = curl_easy_perform(curl);
  curl_easy_cleanup(curl);
  if (rc != CURLE_OK) throw std::runtime_error("fetch " + url + ": " + curl_easy_strerror(rc));
  return body;
}

} // namespace modpart
