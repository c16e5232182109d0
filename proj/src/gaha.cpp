namespace hf {}
