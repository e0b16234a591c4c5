import { HttpApi } from "./api.js";
import { createApp } from "./app.js";

// Same-origin by default; ?api=http://host:port points elsewhere for
// development (the service must then allow the cross-origin request).
const base = new URLSearchParams(window.location.search).get("api") ?? "";
const root = document.getElementById("app");
if (root) {
  createApp(root, new HttpApi(base));
}
