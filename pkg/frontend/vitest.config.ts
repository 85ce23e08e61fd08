import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "node",
    include: ["tests/**/*.test.ts"],
    // the integration suite spawns the real service process
    testTimeout: 30000,
    hookTimeout: 30000,
  },
});
