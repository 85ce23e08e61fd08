// Newline-delimited JSON reader for streamed responses. Lines can be
// split across network chunks, so bytes are buffered until a full line
// is available; a trailing line without a newline is still delivered.

export async function* ndjsonLines(
  stream: ReadableStream<Uint8Array>,
): AsyncGenerator<string> {
  const reader = stream.getReader();
  const decoder = new TextDecoder();
  let buffer = "";
  try {
    for (;;) {
      const { done, value } = await reader.read();
      if (done) break;
      buffer += decoder.decode(value, { stream: true });
      let newline;
      while ((newline = buffer.indexOf("\n")) >= 0) {
        const line = buffer.slice(0, newline);
        buffer = buffer.slice(newline + 1);
        if (line.trim() !== "") yield line;
      }
    }
    buffer += decoder.decode();
    if (buffer.trim() !== "") yield buffer;
  } finally {
    reader.releaseLock();
  }
}

export async function* parseNdjson<T>(
  stream: ReadableStream<Uint8Array>,
): AsyncGenerator<T> {
  for await (const line of ndjsonLines(stream)) {
    yield JSON.parse(line) as T;
  }
}
