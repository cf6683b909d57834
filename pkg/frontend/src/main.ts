/**
 * Browser entry point: mount the studio against a service URL taken from
 * the page query string (?server=...&user=...).
 */

import { AuthClient } from "./api.js";
import { createStudio } from "./ui.js";

export function mount(root: HTMLElement): void {
  const params = new URLSearchParams(root.ownerDocument.location?.search ?? "");
  const server = params.get("server") ?? "http://127.0.0.1:8750";
  const user = params.get("user");
  const studio = createStudio(root, new AuthClient(server));
  if (user) {
    void studio.begin(user);
  }
}

declare const document: Document | undefined;

if (typeof document !== "undefined") {
  const host = document.getElementById("gpw-studio");
  if (host) {
    mount(host);
  }
}
