// filled in with the input parser and bundle IO
