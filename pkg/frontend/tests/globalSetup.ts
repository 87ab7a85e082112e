// Spawns the pivotcube service on the shipped student fixture so the
// explorer tests exercise the real HTTP surface.

import { spawn, type ChildProcess } from "node:child_process";
import { fileURLToPath } from "node:url";
import { dirname, join } from "node:path";

const PORT = Number(process.env.PIVOTCUBE_TEST_PORT ?? 8831);
const HERE = dirname(fileURLToPath(import.meta.url));
const MANIFEST = join(HERE, "..", "..", "src", "pivotcube", "fixtures", "student.manifest");

let server: ChildProcess | undefined;

async function waitForHealth(base: string, timeoutMs: number): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  let lastError: unknown = null;
  while (Date.now() < deadline) {
    try {
      const response = await fetch(`${base}/api/health`);
      if (response.ok) return;
    } catch (err) {
      lastError = err;
    }
    await new Promise((resolve) => setTimeout(resolve, 200));
  }
  throw new Error(`service did not come up on ${base}: ${lastError}`);
}

export default async function setup(): Promise<() => Promise<void>> {
  server = spawn(
    "python3",
    ["-m", "pivotcube.cli", "serve", "--manifest", MANIFEST, "--port", String(PORT)],
    { stdio: ["ignore", "inherit", "inherit"] },
  );
  const exited = new Promise<never>((_, reject) => {
    server!.on("exit", (code) => reject(new Error(`service exited early (code ${code})`)));
  });
  await Promise.race([waitForHealth(`http://127.0.0.1:${PORT}`, 30000), exited]);
  server.removeAllListeners("exit");

  return async () => {
    if (server && !server.killed) {
      server.kill("SIGTERM");
      await new Promise((resolve) => {
        server!.on("exit", resolve);
        setTimeout(resolve, 3000);
      });
    }
  };
}
