import { defineConfig } from "vitest/config";

export const SERVER_PORT = Number(process.env.PIVOTCUBE_TEST_PORT ?? 8831);

export default defineConfig({
  test: {
    environment: "happy-dom",
    environmentOptions: {
      happyDOM: {
        // same origin as the spawned service so relative fetches hit it
        url: `http://127.0.0.1:${SERVER_PORT}`,
      },
    },
    globalSetup: "./tests/globalSetup.ts",
    include: ["tests/**/*.test.ts"],
    testTimeout: 20000,
    hookTimeout: 60000,
  },
});
