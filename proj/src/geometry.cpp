namespace srt {}
