// CLI implementation lands with the tools target.
