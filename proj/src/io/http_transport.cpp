#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "chromatica/error.hpp"
#include "chromatica/io.hpp"

namespace chromatica::io {

HttpResponse HttpTransport::get(const std::string& url) {
  // split "scheme://host[:port]/path"
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw NetworkError("malformed URL '" + url + "'");
  const auto path_start = url.find('/', scheme_end + 3);
  const std::string origin = url.substr(0, path_start);
  const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

  httplib::Client client(origin);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  client.set_follow_location(true);
  auto response = client.Get(path, {{"Accept", "application/json, text/plain"}});
  if (!response) {
    throw NetworkError("request to '" + url + "' failed: " + httplib::to_string(response.error()));
  }
  return {response->status, response->body};
}

}  // namespace chromatica::io
