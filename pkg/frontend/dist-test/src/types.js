/** Wire types of the play service, field names exactly as served. */
export {};
//# sourceMappingURL=types.js.map