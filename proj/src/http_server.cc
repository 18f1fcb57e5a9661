// Copyright 2026 The provgroup Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "httplib.h"
#include "provgroup/service.h"

namespace provgroup {

void BindService(httplib::Server& server, Service& service) {
  // The explorer UI is served from a different origin.
  server.set_default_headers(
      {{"Access-Control-Allow-Origin", "*"},
       {"Access-Control-Allow-Methods", "GET, POST, PUT, OPTIONS"},
       {"Access-Control-Allow-Headers", "Content-Type"}});

  auto forward = [&service](const httplib::Request& req,
                            httplib::Response& res) {
    std::map<std::string, std::string> query;
    for (const auto& [key, value] : req.params) query.emplace(key, value);
    HttpResponse out = service.Handle(req.method, req.path, query, req.body);
    res.status = out.status;
    if (out.status != 204) res.set_content(out.body, out.content_type);
  };
  server.Get(".*", forward);
  server.Post(".*", forward);
  server.Put(".*", forward);
  server.Options(".*", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
}

}  // namespace provgroup
