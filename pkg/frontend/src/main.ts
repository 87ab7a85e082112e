import { ApiClient } from "./api.js";
import { Explorer } from "./app.js";

const root = document.getElementById("app");
if (!root) throw new Error("missing #app mount point");
void new Explorer(root, new ApiClient("")).init();
